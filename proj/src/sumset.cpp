#include "zgdof/sumset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace zgdof {

namespace {

void validate_problem(const StackingProblem& problem, std::vector<const Box*>& selected) {
    std::map<std::string, const Box*> by_id;
    for (const auto& box : problem.boxes) {
        if (box.level < 0) throw ConfigError("box " + box.id + ": negative level");
        if (box.height <= 0) throw ConfigError("box " + box.id + ": height must be positive");
        if (!by_id.emplace(box.id, &box).second)
            throw ConfigError("duplicate box id " + box.id);
    }
    // Within one source, boxes are sub-sections of a single signal and must
    // occupy pairwise disjoint level intervals.
    for (std::size_t i = 0; i < problem.boxes.size(); ++i) {
        for (std::size_t j = i + 1; j < problem.boxes.size(); ++j) {
            const Box& a = problem.boxes[i];
            const Box& b = problem.boxes[j];
            if (a.source != b.source) continue;
            if (a.level < b.level + b.height && b.level < a.level + a.height)
                throw ConfigError("boxes " + a.id + " and " + b.id +
                                  " overlap within one source");
        }
    }
    std::map<std::string, int> seen;
    for (const auto& id : problem.query) {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw UnknownBoxId("unknown box id in query: " + id);
        if (++seen[id] > 1) throw ConfigError("duplicate id in query: " + id);
        selected.push_back(it->second);
    }
}

bool order_admissible(const std::vector<const Box*>& order) {
    Rational floor_level(0);
    for (const Box* box : order) {
        if (box->level < floor_level) return false;
        floor_level += box->height;
    }
    return true;
}

} // namespace

StackResult stacking_feasible(const StackingProblem& problem) {
    std::vector<const Box*> boxes;
    validate_problem(problem, boxes);
    std::sort(boxes.begin(), boxes.end(), [](const Box* a, const Box* b) {
        const Rational ta = a->level + a->height;
        const Rational tb = b->level + b->height;
        if (ta != tb) return ta < tb;
        return a->id < b->id;
    });
    if (!order_admissible(boxes)) return {false, {}};
    StackResult result{true, {}};
    for (const Box* box : boxes) result.order.push_back(box->id);
    return result;
}

bool brute_force_feasible(const StackingProblem& problem) {
    std::vector<const Box*> boxes;
    validate_problem(problem, boxes);
    if (boxes.size() > 10)
        throw TooManyBoxes("brute force capped at 10 boxes, got " +
                           std::to_string(boxes.size()));
    // Exhaustive search over all orders, expressed as backtracking so
    // prefixes that already lift a box are not extended (still exact: every
    // admissible order has only admissible prefixes).
    std::vector<bool> used(boxes.size(), false);
    const std::function<bool(std::size_t, const Rational&)> place =
        [&](std::size_t placed, const Rational& height) -> bool {
        if (placed == boxes.size()) return true;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            if (used[i] || boxes[i]->level < height) continue;
            used[i] = true;
            if (place(placed + 1, Rational(height + boxes[i]->height))) return true;
            used[i] = false;
        }
        return false;
    };
    return place(0, Rational(0));
}

WindowPlan sliding_window_plan(const Rational& p, const Rational& q,
                               const Rational& mu, const Rational& nu) {
    if (p <= 0 || q <= 0 || mu < 0 || nu < 0)
        throw RatioOutOfRange("window plan: need p, q > 0 and mu, nu >= 0");
    const Rational ratio = p / q;
    if (ratio < Rational(1, 2) || ratio > 1)
        throw RatioOutOfRange("window plan: p/q must lie in [1/2, 1], got " +
                              rational_to_string(ratio));

    WindowPlan plan;
    plan.p = p;
    plan.q = q;
    plan.mu = mu;
    plan.nu = nu;
    // p/q in lowest terms gives ptilde/qtilde; the slice height l = p/ptilde
    // is the largest value dividing both p and q into integers.
    plan.ptilde = numerator(ratio).convert_to<long>();
    plan.qtilde = denominator(ratio).convert_to<long>();
    plan.slice_height = p / plan.ptilde;

    const long total = 2 * plan.ptilde;
    for (long i = 1; i <= total; ++i) {
        const long within = (i <= plan.ptilde) ? i : i - plan.ptilde;
        Box box;
        box.id = "A" + std::to_string(i);
        box.source = (i <= plan.ptilde) ? BoxSource::T : BoxSource::U;
        box.level = q - within * plan.slice_height;
        box.height = plan.slice_height;
        plan.boxes.push_back(std::move(box));
    }
    for (long s = 0; s < total; ++s) {
        std::vector<int> window;
        for (long j = 0; j < plan.qtilde; ++j)
            window.push_back(static_cast<int>((s + j) % total) + 1);
        plan.windows.push_back(std::move(window));
    }

    StackingProblem check{plan.boxes, {}};
    for (const auto& window : plan.windows) {
        check.query.clear();
        for (int idx : window) check.query.push_back(plan.boxes[idx - 1].id);
        if (!stacking_feasible(check).feasible)
            throw std::logic_error("sliding window failed to stack; this is a bug");
    }
    return plan;
}

InequalityStatement sumset_inequality(const WindowPlan& plan) {
    InequalityStatement st;
    st.lhs_coeff = 2 * plan.p;
    st.rhs_coeff = plan.q;

    auto coeff = [](const Rational& c) {
        return c == 1 ? std::string() : rational_to_string(c) + "·";
    };
    std::string cond = "W";
    if (plan.mu > 0) cond += ", T^{(" + rational_to_string(plan.mu) + ")}";
    if (plan.nu > 0) cond += ", U^{(" + rational_to_string(plan.nu) + ")}";
    st.conditioning = cond;

    st.text = coeff(st.lhs_coeff) + "H(V|" + cond + ") ≥ " + coeff(st.rhs_coeff) +
              "H(T^{(" + rational_to_string(plan.p + plan.mu) + ")}, U^{(" +
              rational_to_string(plan.p + plan.nu) + ")} | " + cond +
              ") + n·o(log P̄)";
    return st;
}

namespace {

// Entropy in bits of an empirical count map with total n.
template <typename Map>
double count_entropy(const Map& counts, double n) {
    double h = 0;
    for (const auto& [key, c] : counts) {
        (void)key;
        const double f = static_cast<double>(c) / n;
        h -= f * std::log2(f);
    }
    return h;
}

struct JointState {
    long long t, u;     // inputs
    long long wt, wu;   // reserved tops: (T)^mu, (U)^nu
    long long rt, ru;   // rhs sections: (T)^{p+mu}, (U)^{p+nu}
};

} // namespace

EntropyCheckReport empirical_entropy_check(const WindowPlan& plan,
                                           const PowerContext& ctx,
                                           InputDistribution dist,
                                           bool exact,
                                           std::size_t trials,
                                           const GainEnsemble& gains) {
    const Rational cap_t = plan.q + plan.mu;
    const Rational cap_u = plan.q + plan.nu;
    const Int nt_big = ctx.pbar(cap_t);
    const Int nu_big = ctx.pbar(cap_u);
    if (exact && nt_big * nu_big > 1000000)
        throw StateSpaceTooLarge("exact mode needs <= 1e6 joint outcomes, got " +
                                 Int(nt_big * nu_big).str());
    if (nt_big > (Int(1) << 40) || nu_big > (Int(1) << 40))
        throw StateSpaceTooLarge("input alphabet too large for the harness");
    const long long nt = nt_big.convert_to<long long>();
    const long long nu = nu_big.convert_to<long long>();

    // Section divisors. Sub-sections here are plain quotients of the level
    // hierarchy: (X)^mu = floor(X / pbar(q)), (X)^{p+mu} = floor(X / pbar(q-p)).
    const long long div_wt = ctx.pbar(plan.q).convert_to<long long>();
    const long long div_wu = div_wt;
    const long long div_rt = ctx.pbar(plan.q - plan.p).convert_to<long long>();
    const long long div_ru = div_rt;

    auto make_state = [&](long long t, long long u) {
        return JointState{t, u, t / div_wt, u / div_wu, t / div_rt, u / div_ru};
    };

    std::vector<JointState> support;
    if (exact) {
        switch (dist) {
            case InputDistribution::IndependentUniform:
                support.reserve(static_cast<std::size_t>(nt * nu));
                for (long long t = 0; t < nt; ++t)
                    for (long long u = 0; u < nu; ++u) support.push_back(make_state(t, u));
                break;
            case InputDistribution::Aligned:
                for (long long t = 0; t < nt; ++t) support.push_back(make_state(t, t % nu));
                break;
            case InputDistribution::Zero:
                support.push_back(make_state(0, 0));
                break;
        }
    } else {
        support.reserve(trials);
        for (std::size_t i = 0; i < trials; ++i) {
            CounterRng rng(gains.seed(), 101, i);
            long long t = 0, u = 0;
            switch (dist) {
                case InputDistribution::IndependentUniform:
                    t = static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(nt)));
                    u = static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(nu)));
                    break;
                case InputDistribution::Aligned:
                    t = static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(nt)));
                    u = t % nu;
                    break;
                case InputDistribution::Zero:
                    break;
            }
            support.push_back(make_state(t, u));
        }
    }
    const double n = static_cast<double>(support.size());

    // RHS is gain-free: q * H((T)^{p+mu}, (U)^{p+nu} | (T)^mu, (U)^nu).
    std::map<std::array<long long, 4>, long long> rhs_joint;
    std::map<std::array<long long, 2>, long long> tops;
    for (const auto& s : support) {
        ++rhs_joint[{s.rt, s.ru, s.wt, s.wu}];
        ++tops[{s.wt, s.wu}];
    }
    const double h_tops = count_entropy(tops, n);
    const double rhs_cond = count_entropy(rhs_joint, n) - h_tops;

    // LHS averages 2p * H(V | tops) over gain draws; receivers know the
    // gains, so each draw conditions on its own realization.
    const std::size_t draws = exact ? std::max<std::size_t>(trials, 1) : 1;
    double lhs_sum = 0;
    for (std::size_t d = 0; d < draws; ++d) {
        CounterRng rng(gains.seed(), 7, d);
        const double g1 = gains.sample_one(rng);
        const double g2 = gains.sample_one(rng);
        std::map<std::array<long long, 3>, long long> v_joint;
        for (const auto& s : support) {
            const long long v =
                static_cast<long long>(std::floor(g1 * static_cast<double>(s.t))) +
                static_cast<long long>(std::floor(g2 * static_cast<double>(s.u)));
            ++v_joint[{v, s.wt, s.wu}];
        }
        lhs_sum += count_entropy(v_joint, n) - h_tops;
    }

    EntropyCheckReport report;
    report.exact = exact;
    report.gain_draws = draws;
    report.lhs_bits = 2 * rational_to_double(plan.p) * (lhs_sum / draws);
    report.rhs_bits = rational_to_double(plan.q) * rhs_cond;
    report.gap_bits = report.lhs_bits - report.rhs_bits;
    const double log_pbar = std::log2(ctx.pbar(Rational(1)).convert_to<double>());
    report.normalized_gap = report.gap_bits / log_pbar;
    return report;
}

} // namespace zgdof
