#include "zgdof/latticesim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

namespace zgdof {

namespace {

double pbar_pow(double pbar, double e) { return std::pow(pbar, e); }

long long floored_count(double factor, double pbar, double exp, long long offset) {
    const double raw = std::floor(factor * pbar_pow(pbar, exp)) + static_cast<double>(offset);
    return raw < 0 ? 0 : static_cast<long long>(raw);
}

struct ComponentDef {
    const char* name;
    double scale_exp;
    double spacing_exp; // 0 means unit spacing
    double count_exp;
    double count_factor;
    long long count_offset;
    bool is_message;
};

LatticeSpec make_component(const ComponentDef& def, double A, double pbar,
                           const std::map<std::string, ExponentOverride>& overrides) {
    double scale_exp = def.scale_exp;
    double spacing_exp = def.spacing_exp;
    double count_exp = def.count_exp;
    if (auto it = overrides.find(def.name); it != overrides.end()) {
        if (!std::isnan(it->second.scale_exp)) scale_exp = it->second.scale_exp;
        if (!std::isnan(it->second.spacing_exp)) spacing_exp = it->second.spacing_exp;
        if (!std::isnan(it->second.count_exp)) count_exp = it->second.count_exp;
    }
    LatticeSpec spec;
    spec.name = def.name;
    spec.scale = A * pbar_pow(pbar, scale_exp);
    spec.spacing = spacing_exp == 0.0 ? 1.0 : std::max(std::floor(pbar_pow(pbar, spacing_exp)), 1.0);
    spec.count = floored_count(def.count_factor, pbar, count_exp, def.count_offset);
    spec.is_message = def.is_message;
    return spec;
}

// Mean power of a uniform +-count lattice: E[k^2] * (scale*spacing)^2.
double component_power(const LatticeSpec& c) {
    const double n = static_cast<double>(c.count);
    const double step = c.scale * c.spacing;
    return step * step * n * (n + 1.0) / 3.0;
}

const LatticeSpec& find_component(const Scheme& s, const std::string& name) {
    for (const auto& c : s.components)
        if (c.name == name) return c;
    throw UnsupportedCombination("scheme has no component " + name);
}

bool is_lattice(SchemeKind k) {
    return k == SchemeKind::LatticeR1Perfect || k == SchemeKind::LatticeR2Perfect;
}

bool is_jamming(SchemeKind k) {
    return k == SchemeKind::JamR1Fp || k == SchemeKind::JamR2Fp || k == SchemeKind::JamR4Fp;
}

long long clamp_round(double x, long long n) {
    const long long k = static_cast<long long>(std::llround(x));
    return std::max(-n, std::min(n, k));
}

} // namespace

std::string scheme_kind_name(SchemeKind k) {
    switch (k) {
        case SchemeKind::LatticeR1Perfect: return "r1-perfect";
        case SchemeKind::LatticeR2Perfect: return "r2-perfect";
        case SchemeKind::JamR1Fp: return "r1-fp";
        case SchemeKind::JamR2Fp: return "r2-fp";
        case SchemeKind::JamR4Fp: return "r4-fp";
        case SchemeKind::BcZeroForcing: return "bc-zf";
    }
    return "?";
}

std::string preset_name(Preset p) {
    return p == Preset::Verbatim ? "verbatim" : "calibrated";
}

Scheme build_scheme(const SchemeConfig& config) {
    if (!(config.epsilon > 0)) throw ConfigError("epsilon must be positive");
    if (!(config.P > 1)) throw ConfigError("P must exceed 1");

    const double alpha = rational_to_double(config.params.alpha);
    const double beta = rational_to_double(config.params.beta);
    const double eps = config.epsilon;
    const RegimeId regime =
        classify_regime(config.params, {is_jamming(config.kind) ? Topology::IC : Topology::IC,
                                        is_jamming(config.kind) ? Csit::FinitePrecision
                                                                : Csit::Perfect});

    Scheme scheme;
    scheme.config = config;
    scheme.pbar = std::sqrt(config.P);
    const double pbar = scheme.pbar;

    switch (config.kind) {
        case SchemeKind::LatticeR1Perfect: {
            if (regime.id != Regime::R1)
                throw UnsupportedCombination("r1-perfect needs 1 < beta < alpha");
            scheme.A = 8.0 * pbar_pow(pbar, 2 * eps);
            std::vector<ComponentDef> defs;
            if (config.preset == Preset::Verbatim) {
                defs = {{"V11", -beta, alpha - eps, beta - alpha - eps, 1.0, 0, true},
                        {"J1", -beta, alpha - 1 - eps, 1 - eps, 0.125, -1, false},
                        {"V12", -beta, 0.0, alpha - 1 - 2 * eps, 0.25, -1, true},
                        {"V2", -alpha, alpha - 1 - eps, 1 - eps, 0.125, -1, true}};
                scheme.rx1_mult = pbar_pow(pbar, beta);
                scheme.rx2_mult = pbar_pow(pbar, alpha);
            } else {
                // Swapped strength exponents plus a 1/32 count factor on V11
                // so the composed Tx1 power stays within the unit budget.
                defs = {{"V11", -alpha, beta - eps, alpha - beta - eps, 1.0 / 32.0, 0, true},
                        {"J1", -alpha, beta - 1 - eps, 1 - eps, 0.125, -1, false},
                        {"V12", -alpha, 0.0, beta - 1 - 2 * eps, 0.25, -1, true},
                        {"V2", -beta, beta - 1 - eps, 1 - eps, 0.125, -1, true}};
                scheme.rx1_mult = pbar_pow(pbar, alpha);
                scheme.rx2_mult = pbar;
            }
            for (const auto& d : defs)
                scheme.components.push_back(
                    make_component(d, scheme.A, pbar, config.exponent_overrides));
            break;
        }
        case SchemeKind::LatticeR2Perfect: {
            if (regime.id != Regime::R2)
                throw UnsupportedCombination("r2-perfect needs 1 < beta and beta-1 < alpha <= beta");
            std::vector<ComponentDef> defs;
            if (config.preset == Preset::Verbatim) {
                scheme.A = pbar_pow(pbar, 2 * eps);
                defs = {{"V1", -beta, 0.0, alpha - 1 - 2 * eps, 0.5, -1, true},
                        {"J1", -beta, alpha - 1 - eps, 1 - alpha + beta - eps, 1.0, 0, false},
                        {"V2", -alpha, alpha - 1 - eps, 1 - alpha + beta - eps, 1.0, 0, true}};
                scheme.rx1_mult = pbar_pow(pbar, beta);
                scheme.rx2_mult = pbar;
            } else {
                // Larger amplitude traded against 1/8 count factors, exactly
                // as in the first-regime preset: same transmit power, far
                // better noise margin (the error bound scales as exp(-A^2/8)).
                scheme.A = 8.0 * pbar_pow(pbar, 2 * eps);
                defs = {{"V1", -alpha, 0.0, beta - 1 - 2 * eps, 0.25, -1, true},
                        {"J1", -alpha, beta - 1 - eps, 1 - beta + alpha - eps, 0.125, -1, false},
                        {"V2", -beta, beta - 1 - eps, 1 - beta + alpha - eps, 0.125, -1, true}};
                scheme.rx1_mult = pbar_pow(pbar, alpha);
                scheme.rx2_mult = pbar;
            }
            for (const auto& d : defs)
                scheme.components.push_back(
                    make_component(d, scheme.A, pbar, config.exponent_overrides));
            break;
        }
        case SchemeKind::JamR1Fp: {
            if (regime.id != Regime::R1)
                throw UnsupportedCombination("r1-fp needs 1 < beta < alpha");
            // Message above the cross-link level, jamming floor right at it.
            scheme.tx1_jam_power = std::pow(config.P, beta - alpha);
            scheme.tx1_message_power = 1.0 - scheme.tx1_jam_power;
            scheme.tx2_power = 1.0;
            break;
        }
        case SchemeKind::JamR2Fp: {
            if (regime.id != Regime::R2)
                throw UnsupportedCombination("r2-fp needs 1 < beta and beta-1 < alpha <= beta");
            scheme.tx1_jam_power = 1.0;
            scheme.tx1_message_power = 0.0;
            scheme.tx2_power = std::pow(config.P, -(beta - alpha));
            break;
        }
        case SchemeKind::JamR4Fp: {
            if (regime.id != Regime::R4)
                throw UnsupportedCombination("r4-fp needs beta <= 1");
            scheme.tx1_jam_power = std::min(1.0, std::pow(config.P, beta - alpha));
            scheme.tx1_message_power = 1.0 - scheme.tx1_jam_power;
            scheme.tx2_power = 1.0;
            break;
        }
        case SchemeKind::BcZeroForcing:
            // Power is budgeted inside the precoder (c1 = 1/2 and the
            // normalized c2); nothing to construct here.
            break;
    }

    if (is_lattice(config.kind)) {
        double tx1 = 0, tx2 = 0;
        for (const auto& c : scheme.components)
            (c.name == "V2" ? tx2 : tx1) += component_power(c);
        scheme.tx1_power_analytic = tx1;
        scheme.tx2_power_analytic = tx2;
    } else {
        scheme.tx1_power_analytic = scheme.tx1_message_power + scheme.tx1_jam_power;
        scheme.tx2_power_analytic = scheme.tx2_power;
    }
    const double budget = 1.0 + 1e-9;
    if (scheme.tx1_power_analytic > budget || scheme.tx2_power_analytic > budget)
        throw PowerBudgetExceeded(
            "transmit power budget exceeded (tx1=" + std::to_string(scheme.tx1_power_analytic) +
            ", tx2=" + std::to_string(scheme.tx2_power_analytic) + ") for preset " +
            preset_name(scheme.config.preset));
    return scheme;
}

double wilson_halfwidth(std::size_t k, std::size_t n) {
    if (n == 0) return 1.0;
    const double z = 1.959963984540054;
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(k) / nn;
    const double denom = 1.0 + z * z / nn;
    return (z / denom) * std::sqrt(p * (1.0 - p) / nn + z * z / (4.0 * nn * nn));
}

namespace {

// Lattice-scheme trial state shared by the Monte Carlo and exhaustive paths.
struct LatticeDecoder {
    const Scheme& s;
    double ga, gb, g2; // received multipliers: Tx1 at Rx1, V2 at Rx1, V2 at Rx2
    double fold_modulus = 0;
    std::size_t v11_idx = SIZE_MAX, j1_idx = SIZE_MAX, v12_idx = SIZE_MAX, v2_idx = SIZE_MAX;

    explicit LatticeDecoder(const Scheme& scheme) : s(scheme) {
        const double alpha = rational_to_double(s.config.params.alpha);
        const double beta = rational_to_double(s.config.params.beta);
        ga = std::pow(s.pbar, alpha);
        gb = std::pow(s.pbar, beta);
        g2 = s.pbar;
        for (std::size_t i = 0; i < s.components.size(); ++i) {
            const auto& name = s.components[i].name;
            if (name == "V11") v11_idx = i;
            else if (name == "V1" || name == "V12") v12_idx = i;
            else if (name == "J1") j1_idx = i;
            else if (name == "V2") v2_idx = i;
        }
        // Jamming and V2 land on a common lattice at Rx1 (calibrated preset);
        // the fold removes that aggregate before the fine message layer.
        fold_modulus = s.rx1_mult * s.components[j1_idx].scale * s.components[j1_idx].spacing;
    }

    // Returns per-decoder error flags given the drawn indices and noise.
    void decode(const std::vector<long long>& k, double z1, double z2,
                bool& err_coarse, bool& err_fine, bool& err_v2) const {
        double x1 = 0;
        for (std::size_t i = 0; i < s.components.size(); ++i)
            if (i != v2_idx)
                x1 += static_cast<double>(k[i]) * s.components[i].scale * s.components[i].spacing;
        const auto& v2c = s.components[v2_idx];
        const double x2 = static_cast<double>(k[v2_idx]) * v2c.scale * v2c.spacing;
        const double y1 = ga * x1 + gb * x2 + z1;
        const double y2 = g2 * x2 + z2;

        double residual = y1;
        err_coarse = false;
        if (v11_idx != SIZE_MAX) {
            const auto& c = s.components[v11_idx];
            const double step = s.rx1_mult * c.scale * c.spacing;
            const long long khat = clamp_round(y1 / step, c.count);
            err_coarse = khat != k[v11_idx];
            residual = y1 - static_cast<double>(khat) * step;
        }
        const double folded = residual - fold_modulus * std::round(residual / fold_modulus);
        {
            const auto& c = s.components[v12_idx];
            const double step = s.rx1_mult * c.scale * c.spacing;
            const long long khat = clamp_round(folded / step, c.count);
            err_fine = khat != k[v12_idx];
        }
        {
            const double step = s.rx2_mult * v2c.scale * v2c.spacing;
            const long long khat = clamp_round(y2 / step, v2c.count);
            err_v2 = khat != k[v2_idx];
        }
    }
};

struct BlockCounts {
    std::size_t coarse = 0, fine = 0, v2 = 0, joint = 0;
    double sum_r1 = 0, sum_r2 = 0, sum_eav = 0, max_residual = 0;
};

// Runs `blocks` work units with at most `jobs` threads, then reduces in
// block order so the result is independent of the thread schedule.
template <typename Fn>
BlockCounts run_blocks(std::size_t blocks, unsigned jobs, Fn&& block_fn) {
    std::vector<BlockCounts> partial(blocks);
    const unsigned workers = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t b = w; b < blocks; b += workers) partial[b] = block_fn(b);
        });
    }
    for (auto& t : pool) t.join();
    BlockCounts total;
    for (const auto& p : partial) {
        total.coarse += p.coarse;
        total.fine += p.fine;
        total.v2 += p.v2;
        total.joint += p.joint;
        total.sum_r1 += p.sum_r1;
        total.sum_r2 += p.sum_r2;
        total.sum_eav += p.sum_eav;
        total.max_residual = std::max(total.max_residual, p.max_residual);
    }
    return total;
}

constexpr std::size_t kBlockSize = 8192;

} // namespace

SimPoint simulate(const Scheme& scheme, std::size_t trials, std::uint64_t seed,
                  unsigned jobs, bool force_noiseless) {
    if (trials == 0) throw ConfigError("simulate: trials must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    SimPoint point;
    point.P = scheme.config.P;
    point.trials = trials;
    point.seed = seed;
    point.preset = preset_name(scheme.config.preset);
    point.kind = scheme_kind_name(scheme.config.kind);

    const std::size_t blocks = (trials + kBlockSize - 1) / kBlockSize;
    const double alpha = rational_to_double(scheme.config.params.alpha);
    const double beta = rational_to_double(scheme.config.params.beta);
    const double P = scheme.config.P;

    if (is_lattice(scheme.config.kind)) {
        const LatticeDecoder decoder(scheme);
        const auto counts = run_blocks(blocks, jobs, [&](std::size_t b) {
            BlockCounts c;
            const std::size_t lo = b * kBlockSize;
            const std::size_t hi = std::min(trials, lo + kBlockSize);
            std::vector<long long> k(scheme.components.size());
            for (std::size_t t = lo; t < hi; ++t) {
                CounterRng rng(seed, 1, t);
                for (std::size_t i = 0; i < scheme.components.size(); ++i)
                    k[i] = scheme.components[i].count == 0
                               ? 0
                               : rng.next_symmetric(scheme.components[i].count);
                const double z1 = force_noiseless ? 0.0 : rng.next_gaussian();
                const double z2 = force_noiseless ? 0.0 : rng.next_gaussian();
                bool e1 = false, e2 = false, e3 = false;
                decoder.decode(k, z1, z2, e1, e2, e3);
                c.coarse += e1;
                c.fine += e2;
                c.v2 += e3;
                c.joint += (e1 || e2 || e3);
            }
            return c;
        });
        const bool two_layer = decoder.v11_idx != SIZE_MAX;
        auto stat = [&](const std::string& name, std::size_t errs) {
            return DecoderStat{name, errs, static_cast<double>(errs) / trials,
                               wilson_halfwidth(errs, trials)};
        };
        if (two_layer) point.decoders.push_back(stat("V11", counts.coarse));
        point.decoders.push_back(stat(two_layer ? "V12" : "V1", counts.fine));
        point.decoders.push_back(stat("V2", counts.v2));
        point.joint_errors = counts.joint;
        point.joint_rate = static_cast<double>(counts.joint) / trials;
        point.joint_halfwidth = wilson_halfwidth(counts.joint, trials);
        point.analytic_bound = 6.0 * std::exp(-scheme.A * scheme.A / 8.0);
        point.leakage_bits = leakage_check(scheme);
        const auto rates = rate_lower_bounds(scheme, point.joint_rate);
        point.R1_lb = rates.R1_lb;
        point.R2_lb = rates.R2_lb;
        point.d1 = rates.d1;
        point.d2 = rates.d2;
    } else if (is_jamming(scheme.config.kind)) {
        const GainEnsemble gains(scheme.config.delta, 1.0, GainDistribution::UniformSymmetric, seed);
        const double pm = scheme.tx1_message_power;
        const double pj = scheme.tx1_jam_power;
        const double p2 = scheme.tx2_power;
        const auto counts = run_blocks(blocks, jobs, [&](std::size_t b) {
            BlockCounts c;
            const std::size_t lo = b * kBlockSize;
            const std::size_t hi = std::min(trials, lo + kBlockSize);
            for (std::size_t t = lo; t < hi; ++t) {
                CounterRng rng(seed, 2, t);
                const double g11 = gains.sample_one(rng);
                const double g12 = gains.sample_one(rng);
                const double g22 = gains.sample_one(rng);
                const double pa = std::pow(P, alpha);
                const double pb = std::pow(P, beta);
                const double jam_floor = g11 * g11 * pa * pj + 1.0;
                if (pm > 0) {
                    const double sinr1 =
                        g11 * g11 * pa * pm / (jam_floor + g12 * g12 * pb * p2);
                    c.sum_r1 += 0.5 * std::log2(1.0 + sinr1);
                }
                const double eav = g12 * g12 * pb * p2 / jam_floor;
                c.sum_eav += eav;
                const double r2 = 0.5 * std::log2(1.0 + g22 * g22 * P * p2) -
                                  0.5 * std::log2(1.0 + eav);
                c.sum_r2 += std::max(0.0, r2);
            }
            return c;
        });
        point.R1_lb = counts.sum_r1 / trials;
        point.R2_lb = counts.sum_r2 / trials;
        point.eavesdropper_sinr_mean = counts.sum_eav / trials;
        const double half_log_p = 0.5 * std::log2(P);
        point.d1 = point.R1_lb / half_log_p;
        point.d2 = point.R2_lb / half_log_p;
    } else { // BC zero-forcing
        const auto report = bc_zero_forcing(scheme.config.params, P, trials, seed,
                                            scheme.config.delta);
        point.residual_cross_power = report.residual_cross_power;
        point.d1 = report.d1;
        point.d2 = report.d2;
    }

    point.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return point;
}

std::size_t noiseless_exhaustive_failures(const Scheme& scheme) {
    if (!is_lattice(scheme.config.kind))
        throw UnsupportedCombination("exhaustive decoder oracle applies to lattice schemes");
    double tuples = 1;
    for (const auto& c : scheme.components) tuples *= static_cast<double>(c.cardinality());
    if (tuples > 1e7)
        throw StateSpaceTooLarge("exhaustive oracle capped at 1e7 tuples");

    const LatticeDecoder decoder(scheme);
    std::vector<long long> k(scheme.components.size());
    for (auto& v : k) v = 0;
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = -scheme.components[i].count;
    std::size_t failures = 0;
    while (true) {
        bool e1 = false, e2 = false, e3 = false;
        decoder.decode(k, 0.0, 0.0, e1, e2, e3);
        failures += (e1 || e2 || e3);
        std::size_t i = 0;
        for (; i < k.size(); ++i) {
            if (k[i] < scheme.components[i].count) {
                ++k[i];
                break;
            }
            k[i] = -scheme.components[i].count;
        }
        if (i == k.size()) break;
    }
    return failures;
}

double leakage_check(const Scheme& scheme) {
    if (!is_lattice(scheme.config.kind))
        throw UnsupportedCombination("leakage_check applies to lattice schemes");
    const long long nj = find_component(scheme, "J1").count;
    const long long n2 = find_component(scheme, "V2").count;
    if (nj == 0 && n2 == 0) return 0.0;
    const long long span = 2 * (nj + n2) + 1;
    const double h_j = std::log2(static_cast<double>(2 * nj + 1));
    if (span > 10000000) // closed-form support-size ratio upper bound
        return std::log2(static_cast<double>(span)) - h_j;
    // Exact: the aggregate is a sum of two independent uniforms on a common
    // lattice, i.e. a trapezoidal distribution over `span` points.
    const double m1 = static_cast<double>(2 * nj + 1);
    const double m2 = static_cast<double>(2 * n2 + 1);
    const double total = m1 * m2;
    double h_sum = 0;
    for (long long s = -(nj + n2); s <= nj + n2; ++s) {
        // Pairs (a, b) with a + b = s: a trapezoid over the span.
        const double cnt =
            std::min({m1, m2, static_cast<double>(nj + n2 + 1 - std::llabs(s))});
        const double p = cnt / total;
        h_sum -= p * std::log2(p);
    }
    return h_sum - h_j;
}

RateBounds rate_lower_bounds(const Scheme& scheme, double joint_error_rate,
                             std::size_t gain_trials, std::uint64_t seed) {
    RateBounds out;
    const double half_log_p = 0.5 * std::log2(scheme.config.P);
    if (is_lattice(scheme.config.kind)) {
        double msg1_bits = 0;
        for (const auto& c : scheme.components)
            if (c.is_message && c.name != "V2")
                msg1_bits += std::log2(static_cast<double>(c.cardinality()));
        const double msg2_bits =
            std::log2(static_cast<double>(find_component(scheme, "V2").cardinality()));
        const double ok = std::max(0.0, 1.0 - joint_error_rate);
        out.R1_lb = std::max(0.0, msg1_bits * ok - 3.0);
        out.R2_lb = std::max(0.0, msg2_bits * ok - leakage_check(scheme) - 1.0);
    } else if (is_jamming(scheme.config.kind)) {
        const SimPoint pt = simulate(scheme, gain_trials, seed, 1);
        out.R1_lb = pt.R1_lb;
        out.R2_lb = pt.R2_lb;
    } else {
        const auto report = bc_zero_forcing(scheme.config.params, scheme.config.P,
                                            gain_trials, seed, scheme.config.delta);
        out.R1_lb = report.d1 * half_log_p;
        out.R2_lb = report.d2 * half_log_p;
    }
    out.d1 = out.R1_lb / half_log_p;
    out.d2 = out.R2_lb / half_log_p;
    return out;
}

BcZfReport bc_zero_forcing(const ChannelParams& params, double P,
                           std::size_t gain_trials, std::uint64_t seed, double delta) {
    const double alpha = rational_to_double(params.alpha);
    const double beta = rational_to_double(params.beta);
    const GainEnsemble gains(delta, 1.0, GainDistribution::UniformSymmetric, seed);
    BcZfReport report;
    double sum_log1 = 0, sum_log2 = 0, sum_snr1 = 0, sum_snr2 = 0;

    const bool degenerate = beta > 1 && alpha < beta - 1;
    for (std::size_t t = 0; t < gain_trials; ++t) {
        CounterRng rng(seed, 3, t);
        const double g11 = gains.sample_one(rng);
        const double g12 = gains.sample_one(rng);
        const double g22 = gains.sample_one(rng);
        const double pa = std::sqrt(std::pow(P, alpha));
        const double pb = std::sqrt(std::pow(P, beta));
        if (degenerate) {
            // Tx1 silent; Tx2 carries user 1's message at power 1/P so it
            // stays invisible (0 GDoF) at its own receiver's noise level.
            const double snr1 = g12 * g12 * std::pow(P, beta - 1);
            sum_log1 += 0.5 * std::log2(1.0 + snr1);
            sum_snr1 += snr1;
            continue;
        }
        const double c1 = 0.5;
        const double c2 = 1.0 / std::sqrt(2.0 * (g12 * g12 * pb * pb + g11 * g11 * pa * pa));
        // Cross coefficient at Rx1 for user 2's stream; algebraically zero.
        const double residual = g11 * pa * (-c2 * g12 * pb) + g12 * pb * (c2 * g11 * pa);
        report.residual_cross_power = std::max(report.residual_cross_power, residual * residual);
        const double snr1 = g11 * g11 * c1 * c1 * pa * pa;
        const double snr2 = g22 * g22 * P * c2 * c2 * g11 * g11 * pa * pa;
        sum_log1 += 0.5 * std::log2(1.0 + snr1);
        sum_log2 += 0.5 * std::log2(1.0 + snr2);
        sum_snr1 += snr1;
        sum_snr2 += snr2;
    }
    const double n = static_cast<double>(gain_trials);
    const double half_log_p = 0.5 * std::log2(P);
    report.d1 = (sum_log1 / n) / half_log_p;
    report.d2 = (sum_log2 / n) / half_log_p;
    report.snr1_mean_db = 10.0 * std::log10(std::max(sum_snr1 / n, 1e-300));
    report.snr2_mean_db = 10.0 * std::log10(std::max(sum_snr2 / n, 1e-300));
    return report;
}

ConstLemmaReport verify_const_lemma(const Rational& lambda, const Rational& mu,
                                    const Rational& nu, double delta,
                                    std::size_t trials, const PowerContext& ctx,
                                    std::uint64_t seed,
                                    std::optional<std::pair<double, double>> fixed_gains) {
    if (!(lambda >= mu && mu > 0 && nu >= 0))
        throw InvalidInterval("verify_const_lemma: need lambda >= mu > 0 and nu >= 0");
    const Int nt_big = ctx.pbar(nu + lambda);
    const Int nu_big = ctx.pbar(nu + mu);
    if (nt_big > (Int(1) << 40) || nu_big > (Int(1) << 40))
        throw StateSpaceTooLarge("input alphabet too large");
    const long long nt = nt_big.convert_to<long long>();
    const long long nmu = nu_big.convert_to<long long>();
    const long long div_nu = ctx.pbar(nu).convert_to<long long>();

    const GainEnsemble gains(delta, 1.0, GainDistribution::UniformSymmetric, seed);
    std::set<long long> values;

    auto record = [&](long long t, long long u, double g1, double g2) {
        // Combine first, then take the section above level nu...
        const long long v = static_cast<long long>(std::floor(g1 * static_cast<double>(t))) +
                            static_cast<long long>(std::floor(g2 * static_cast<double>(u)));
        const long long v_sec = (v >= 0) ? v / div_nu : -((-v + div_nu - 1) / div_nu);
        // ...versus sectioning each input first and combining those.
        const long long z =
            static_cast<long long>(std::floor(g1 * static_cast<double>(t / div_nu))) +
            static_cast<long long>(std::floor(g2 * static_cast<double>(u / div_nu)));
        values.insert(v_sec - z);
    };

    if (trials == 0) {
        if (nt_big * nu_big > 1000000)
            throw StateSpaceTooLarge("exhaustive mode capped at 1e6 input pairs");
        double g1 = 1.0, g2 = 1.0;
        if (fixed_gains) {
            g1 = fixed_gains->first;
            g2 = fixed_gains->second;
        } else {
            CounterRng rng(seed, 4, 0);
            g1 = gains.sample_one(rng);
            g2 = gains.sample_one(rng);
        }
        for (long long t = 0; t < nt; ++t)
            for (long long u = 0; u < nmu; ++u) record(t, u, g1, g2);
    } else {
        for (std::size_t i = 0; i < trials; ++i) {
            CounterRng rng(seed, 4, i);
            double g1, g2;
            if (fixed_gains) {
                g1 = fixed_gains->first;
                g2 = fixed_gains->second;
            } else {
                g1 = gains.sample_one(rng);
                g2 = gains.sample_one(rng);
            }
            const long long t = static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(nt)));
            const long long u = static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(nmu)));
            record(t, u, g1, g2);
        }
    }

    ConstLemmaReport report;
    report.observed_support_size = values.size();
    report.bound = static_cast<long long>(
        std::llround(3.0 * (4.0 * delta + 3.0) * (4.0 * delta + 6.0)));
    report.pass = static_cast<long long>(values.size()) <= report.bound;
    if (!values.empty()) {
        report.min_value = *values.begin();
        report.max_value = *values.rbegin();
    }
    return report;
}

} // namespace zgdof
