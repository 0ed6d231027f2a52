#ifndef ZGDOF_DETMODEL_HPP
#define ZGDOF_DETMODEL_HPP

// Deterministic power-level machinery: P-bar-ary levels, sub-section
// extraction, the boxplus finite-precision linear combination, the
// deterministic Z-channel, and bounded-density gain sampling.

#include <cstdint>
#include <optional>
#include <vector>

#include "zgdof/rational.hpp"
#include "zgdof/region.hpp"
#include "zgdof/rng.hpp"

namespace zgdof {

// Nominal power P > 1 with the level accessor pbar(lambda) = floor(sqrt(P)^lambda).
//
// When P is an integral value, pbar is computed exactly via integer k-th
// roots: sqrt(P)^(a/b) = (P^a)^(1/(2b)). Non-integral P falls back to
// extended-precision floating point (documented slack: the floor can be off
// only if the true value sits within ~1e-60 of an integer).
class PowerContext {
public:
    explicit PowerContext(double P);

    double P() const { return P_; }
    bool exact() const { return exact_; }

    Int pbar(const Rational& lambda) const;

    // sqrt(P)^lambda as an exact integer if it is one (e.g. P=10^4 and
    // lambda=1/2 gives 10); nullopt otherwise. Exact-base digit identities
    // hinge on this.
    std::optional<Int> exact_power(const Rational& lambda) const;

private:
    double P_;
    bool exact_;
    Int P_int_; // valid only when exact_
};

// A value known to live below a level cap: 0 <= value < pbar(level_cap).
struct LevelValue {
    Int value;
    Rational level_cap;
};

LevelValue subsection(const LevelValue& x, const Rational& lambda1,
                      const Rational& lambda2, const PowerContext& ctx);

// Top-mu sub-section: the most significant mu levels under x's cap.
LevelValue top(const LevelValue& x, const Rational& mu, const PowerContext& ctx);

// floor(g1*x1) + floor(g2*x2); exact (the double gain is a binary rational).
Int boxplus(const LevelValue& x1, const LevelValue& x2, double g1, double g2);

Int floor_mul(double g, const Int& x);

// floor(g * x / sqrt(P)^exponent): exact when sqrt(P)^exponent is an exact
// integer, extended-precision otherwise.
Int floor_scaled(double g, const Int& x, const Rational& exponent,
                 const PowerContext& ctx);

struct DetChannelOutput {
    Int ybar1;
    Int ybar2;
};

// Deterministic Z-channel: only Rx1 hears both inputs, and each signal is
// truncated to the levels the receiver can resolve:
//   ybar1 = floor(g11*a) + floor(g12 * pbar^{-(1-beta)+} * b)
//   ybar2 = floor(g22 * pbar^{-(beta-1)+} * b)
DetChannelOutput det_channel(const LevelValue& a, const LevelValue& b,
                             double g11, double g12, double g22,
                             const ChannelParams& params, const PowerContext& ctx);

enum class GainDistribution {
    UniformSymmetric, // uniform over +-[1/Delta, Delta]
    PointMass         // rejected at construction (unbounded density)
};

// Bounded-density gain ensemble: |g| in (1/Delta, Delta), density <= f_max.
class GainEnsemble {
public:
    GainEnsemble(double delta, double f_max, GainDistribution dist,
                 std::uint64_t seed);

    double delta() const { return delta_; }
    double f_max() const { return f_max_; }
    std::uint64_t seed() const { return seed_; }

    // i.i.d. samples; deterministic given (seed, stream). Each (trial, link)
    // pair should use a fresh stream index so gains are never reused across
    // distinct boxplus invocations.
    std::vector<double> sample(std::size_t count, std::uint64_t stream = 0) const;

    double sample_one(CounterRng& rng) const;

private:
    double delta_;
    double f_max_;
    GainDistribution dist_;
    std::uint64_t seed_;
};

} // namespace zgdof

#endif // ZGDOF_DETMODEL_HPP
