#include "zgdof/detmodel.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

namespace zgdof {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

// Split a double into integer mantissa and power-of-two exponent:
// g = mantissa * 2^exp2, exactly.
void split_double(double g, Int& mantissa, int& exp2) {
    int e = 0;
    const double m = std::frexp(g, &e); // |m| in [0.5, 1) or 0
    const double scaled = m * 9007199254740992.0; // m * 2^53, exact integer
    mantissa = Int(static_cast<long long>(scaled));
    exp2 = e - 53;
}

Int floor_shift(const Int& v, int exp2) {
    if (exp2 >= 0) return v << exp2;
    return floor_div(v, Int(1) << (-exp2));
}

} // namespace

PowerContext::PowerContext(double P) : P_(P), exact_(false) {
    if (!(P > 1.0)) throw ConfigError("power P must exceed 1");
    if (P == std::floor(P) && P <= 1e18) {
        exact_ = true;
        P_int_ = Int(static_cast<unsigned long long>(P));
    }
}

Int PowerContext::pbar(const Rational& lambda) const {
    if (lambda < 0) throw InvalidInterval("pbar: negative level");
    const Int a = numerator(lambda);
    const Int b = denominator(lambda);
    if (exact_) {
        const unsigned ai = a.convert_to<unsigned>();
        const unsigned bi = b.convert_to<unsigned>();
        return iroot(boost::multiprecision::pow(P_int_, ai), 2 * bi);
    }
    const BigFloat half_exp = BigFloat(a) / (2 * BigFloat(b));
    const BigFloat v = boost::multiprecision::pow(BigFloat(P_), half_exp);
    return boost::multiprecision::floor(v).convert_to<Int>();
}

std::optional<Int> PowerContext::exact_power(const Rational& lambda) const {
    if (!exact_ || lambda < 0) return std::nullopt;
    const unsigned a = numerator(lambda).convert_to<unsigned>();
    const unsigned b = denominator(lambda).convert_to<unsigned>();
    const Int pa = boost::multiprecision::pow(P_int_, a);
    const Int r = iroot(pa, 2 * b);
    if (boost::multiprecision::pow(r, 2 * b) == pa) return r;
    return std::nullopt;
}

LevelValue subsection(const LevelValue& x, const Rational& lambda1,
                      const Rational& lambda2, const PowerContext& ctx) {
    if (lambda1 < 0 || lambda1 > lambda2)
        throw InvalidInterval("subsection: need 0 <= lambda1 <= lambda2");
    const Int p2 = ctx.pbar(lambda2);
    const Int p1 = ctx.pbar(lambda1);
    const Int reduced = x.value - p2 * floor_div(x.value, p2);
    return LevelValue{floor_div(reduced, p1), lambda2 - lambda1};
}

LevelValue top(const LevelValue& x, const Rational& mu, const PowerContext& ctx) {
    if (mu < 0 || mu > x.level_cap)
        throw InvalidInterval("top: mu must lie in [0, level_cap]");
    return subsection(x, x.level_cap - mu, x.level_cap, ctx);
}

Int floor_mul(double g, const Int& x) {
    Int m;
    int e;
    split_double(g, m, e);
    return floor_shift(m * x, e);
}

Int floor_scaled(double g, const Int& x, const Rational& exponent,
                 const PowerContext& ctx) {
    if (exponent == 0) return floor_mul(g, x);
    if (auto s = ctx.exact_power(exponent)) {
        // floor(m * x / (2^shift * s)), all integer.
        Int m;
        int e;
        split_double(g, m, e);
        Int num = m * x;
        if (e >= 0) num <<= e;
        Int den = *s;
        if (e < 0) den <<= (-e);
        return floor_div(num, den);
    }
    const BigFloat half_exp = BigFloat(numerator(exponent)) /
                              (2 * BigFloat(denominator(exponent)));
    const BigFloat scale = boost::multiprecision::pow(BigFloat(ctx.P()), half_exp);
    const BigFloat v = BigFloat(g) * BigFloat(x) / scale;
    return boost::multiprecision::floor(v).convert_to<Int>();
}

Int boxplus(const LevelValue& x1, const LevelValue& x2, double g1, double g2) {
    return floor_mul(g1, x1.value) + floor_mul(g2, x2.value);
}

DetChannelOutput det_channel(const LevelValue& a, const LevelValue& b,
                             double g11, double g12, double g22,
                             const ChannelParams& params, const PowerContext& ctx) {
    const Rational b_cap = std::max(Rational(1), params.beta);
    if (a.value < 0 || a.value >= ctx.pbar(params.alpha))
        throw DomainError("det_channel: input a exceeds its level cap");
    if (b.value < 0 || b.value >= ctx.pbar(b_cap))
        throw DomainError("det_channel: input b exceeds its level cap");
    DetChannelOutput out;
    out.ybar1 = floor_mul(g11, a.value) +
                floor_scaled(g12, b.value, positive_part(1 - params.beta), ctx);
    out.ybar2 = floor_scaled(g22, b.value, positive_part(params.beta - 1), ctx);
    return out;
}

GainEnsemble::GainEnsemble(double delta, double f_max, GainDistribution dist,
                           std::uint64_t seed)
    : delta_(delta), f_max_(f_max), dist_(dist), seed_(seed) {
    if (!(delta > 1.0)) throw ConfigError("gain ensemble: Delta must exceed 1");
    if (!(f_max > 0.0)) throw ConfigError("gain ensemble: f_max must be positive");
    switch (dist) {
        case GainDistribution::UniformSymmetric: {
            // Two symmetric intervals of total length 2*(Delta - 1/Delta).
            const double density = 1.0 / (2.0 * (delta - 1.0 / delta));
            if (density > f_max)
                throw ConfigError("gain ensemble: uniform density exceeds f_max");
            break;
        }
        case GainDistribution::PointMass:
            throw ConfigError("gain ensemble: point mass has unbounded density");
    }
}

double GainEnsemble::sample_one(CounterRng& rng) const {
    const double sign = (rng.next_u64() & 1u) ? 1.0 : -1.0;
    const double mag = 1.0 / delta_ + rng.next_unit() * (delta_ - 1.0 / delta_);
    return sign * mag;
}

std::vector<double> GainEnsemble::sample(std::size_t count, std::uint64_t stream) const {
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        CounterRng rng(seed_, stream, i);
        out.push_back(sample_one(rng));
    }
    return out;
}

} // namespace zgdof
