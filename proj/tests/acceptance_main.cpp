// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each check runs the public library API end to end with its own timing
// budget where the criterion carries one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "zgdof/latticesim.hpp"
#include "zgdof/region.hpp"
#include "zgdof/rng.hpp"
#include "zgdof/sumset.hpp"

using namespace zgdof;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    if (!pass) ++failures;
}

Rational r(long long n, long long d = 1) { return Rational(n, d); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::set<std::pair<std::string, std::string>> vertex_set(const GdofRegion& region) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& v : region.vertices)
        out.insert({rational_to_string(v.d1), rational_to_string(v.d2)});
    return out;
}

bool contains_point(const GdofRegion& region, const Point& p) {
    for (const auto& h : region.halfspaces)
        if (h.a1 * p.d1 + h.a2 * p.d2 > h.b) return false;
    return true;
}

StackingProblem fixture(std::vector<std::string> query) {
    StackingProblem p;
    p.boxes = {Box{"A1", BoxSource::T, r(5), r(1)}, Box{"A2", BoxSource::T, r(3), r(2)},
               Box{"A3", BoxSource::T, r(2), r(1)}, Box{"A4", BoxSource::T, r(0), r(2)},
               Box{"A5", BoxSource::U, r(4), r(1)}, Box{"A6", BoxSource::U, r(1), r(3)},
               Box{"A7", BoxSource::U, r(0), r(1)}};
    p.query = std::move(query);
    return p;
}

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const ChannelParams p23{r(2), r(3, 2)};
    const bool perfect_ok =
        vertex_set(gdof_region(p23, {Topology::IC, Csit::Perfect})) ==
        std::set<std::pair<std::string, std::string>>{
            {"0", "0"}, {"2", "0"}, {"1", "1"}, {"0", "1"}};
    const bool fp_ok =
        vertex_set(gdof_region(p23, {Topology::IC, Csit::FinitePrecision})) ==
        std::set<std::pair<std::string, std::string>>{
            {"0", "0"}, {"2", "0"}, {"1/2", "1"}, {"0", "1"}};
    const auto region = gdof_region({r(6, 5), r(3, 2)}, {Topology::IC, Csit::FinitePrecision});
    const auto d2max = weighted_max(region, WeightVector{r(0), r(1)});
    const auto d1_at_d2max = weighted_max(region, WeightVector{r(1), r(0)}, r(7, 10));
    const bool corner_ok = d2max.value == r(7, 10) && d1_at_d2max.value == r(0);
    const bool timed = seconds_since(t0) < 1.0;
    report(1, perfect_ok && fp_ok && corner_ok && timed,
           "exact region corner points at (2, 3/2) and (6/5, 3/2) in under 1 s");
}

void criterion_2() {
    const auto region = gdof_region({r(1), r(3, 2)}, {Topology::IC, Csit::FinitePrecision});
    const auto res = weighted_max(region, WeightVector{r(1), r(0)}, r(1, 2));
    report(2, res.value == r(0),
           "at (1, 3/2) finite precision, pinning d2 = 1/2 forces max d1 = 0");
}

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    // 50x50 grid confined to the two strong-cross-link regimes: beta in
    // (1, 3/2], alpha > 1/2 >= beta - 1 throughout.
    std::vector<Rational> alphas, betas;
    for (int i = 0; i < 50; ++i) alphas.push_back(Rational(6 + i, 10)); // 0.6 .. 5.5
    for (int j = 1; j <= 50; ++j) betas.push_back(Rational(100 + j, 100)); // 1.01 .. 1.5
    const auto scan = ratio_scan(alphas, betas, {WeightVector{r(1), r(1)}}, true);
    const bool floor_ok = scan.min_ratio >= r(1, 2);

    // The published extremal family: weights proportional to (1, alpha - 1)
    // along beta = alpha - 1/10 descend strictly toward 1/2. (The transposed
    // ordering (alpha - 1, 1) is maximized at the shared vertex (alpha, 0)
    // and stays at ratio 1; the descending ordering is the meaningful one.)
    std::vector<Rational> seq;
    for (long long a : {4LL, 16LL, 64LL})
        seq.push_back(fp_to_p_ratio({r(a), Rational(10 * a - 1, 10)},
                                    WeightVector{r(1), r(a - 1)}));
    const bool decreasing = seq[0] > seq[1] && seq[1] > seq[2];
    const bool tail_ok = seq[2] < Rational(52, 100) && seq[2] >= r(1, 2);
    const double elapsed = seconds_since(t0);
    report(3, floor_ok && decreasing && tail_ok && elapsed < 30.0,
           "ratio scan min >= 1/2 over a 50x50 grid and the near-diagonal weight "
           "family descends below 0.52 (" + std::to_string(elapsed).substr(0, 5) + " s)");
}

void criterion_4() {
    const bool ok = stacking_feasible(fixture({"A1", "A2", "A4", "A5"})).feasible &&
                    stacking_feasible(fixture({"A1", "A5", "A6"})).feasible &&
                    !stacking_feasible(fixture({"A2", "A3", "A6"})).feasible &&
                    !stacking_feasible(fixture({"A4", "A6"})).feasible;
    report(4, ok, "reference stacking fixtures match their feasibility marks");
}

void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    bool agree = true;
    for (int trial = 0; trial < 10000 && agree; ++trial) {
        CounterRng rng(kDefaultSeed, 41, static_cast<std::uint64_t>(trial));
        StackingProblem p;
        std::vector<Rational> next_level = {r(0), r(0)};
        const int n = 2 + static_cast<int>(rng.next_below(7));
        for (int i = 0; i < n; ++i) {
            const int src = static_cast<int>(rng.next_below(2));
            const Rational gap(static_cast<long long>(rng.next_below(4)),
                               1 + static_cast<long long>(rng.next_below(2)));
            const Rational height(1 + static_cast<long long>(rng.next_below(5)),
                                  1 + static_cast<long long>(rng.next_below(2)));
            Box b{"B" + std::to_string(i), src ? BoxSource::U : BoxSource::T,
                  next_level[src] + gap, height};
            next_level[src] = b.level + b.height;
            p.boxes.push_back(std::move(b));
            p.query.push_back("B" + std::to_string(i));
        }
        agree = stacking_feasible(p).feasible == brute_force_feasible(p);
    }
    const double elapsed = seconds_since(t0);
    report(5, agree && elapsed < 60.0,
           "greedy matches the exhaustive oracle on 10^4 random problems (" +
               std::to_string(elapsed).substr(0, 5) + " s)");
}

void criterion_6() {
    const auto plan = sliding_window_plan(r(2), r(3), r(0), r(0));
    bool ok = plan.windows == std::vector<std::vector<int>>{
                  {1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {4, 1, 2}};
    for (const auto& w : plan.windows) {
        StackingProblem p{plan.boxes, {}};
        for (int idx : w) p.query.push_back("A" + std::to_string(idx));
        ok = ok && stacking_feasible(p).feasible;
    }
    report(6, ok, "p=2, q=3 window plan yields the four circular windows, all feasible");
}

void criterion_7() {
    const PowerContext ctx(100.0);
    bool ok = subsection({Int(123456), r(6)}, r(2), r(4), ctx).value == 34 &&
              top({Int(987), r(3)}, r(2), ctx).value == 98;
    for (long long x = 0; x < 10000 && ok; ++x) {
        Int acc = 0;
        for (int i = 0; i < 4; ++i)
            acc += subsection({Int(x), r(4)}, r(i), r(i + 1), ctx).value * ctx.pbar(r(i));
        ok = acc == x;
    }
    report(7, ok, "digit identities at P=100 and exhaustive reconstruction below 10^4");
}

void criterion_8() {
    const auto random_gains =
        verify_const_lemma(r(2), r(1), r(1), 2.0, 100000, PowerContext(1024.0));
    const auto unit_gains = verify_const_lemma(r(2), r(2), r(0), 2.0, 0, PowerContext(100.0),
                                               kDefaultSeed, std::make_pair(1.0, 1.0));
    const bool ok = random_gains.bound == 462 && random_gains.pass &&
                    random_gains.observed_support_size <= 462 && unit_gains.pass &&
                    unit_gains.min_value >= -2 && unit_gains.max_value <= 2;
    report(8, ok,
           "distortion support <= 462 over 10^5 trials; unit gains stay in {-2..2}");
}

void criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    // The printed lattice exponents are not buildable in this regime (the
    // power audit rejects them), so the calibrated preset is the well-defined
    // parameterization and is what runs here.
    bool verbatim_undefined = false;
    {
        SchemeConfig v{SchemeKind::LatticeR1Perfect, ChannelParams{r(2), r(3, 2)}};
        v.P = 1e4;
        v.preset = Preset::Verbatim;
        try {
            build_scheme(v);
        } catch (const PowerBudgetExceeded&) {
            verbatim_undefined = true;
        }
    }
    SchemeConfig cfg{SchemeKind::LatticeR1Perfect, ChannelParams{r(2), r(3, 2)}};
    cfg.P = 1e4;
    const bool oracle_ok = noiseless_exhaustive_failures(build_scheme(cfg)) == 0;
    bool bound_ok = true, leakage_ok = true, monotone_ok = true;
    double prev = 1.0, prev_hw = 0.0;
    for (double P : {1e4, 1e6, 1e8}) {
        cfg.P = P;
        const Scheme s = build_scheme(cfg);
        const SimPoint pt = simulate(s, 100000, kDefaultSeed, 4);
        bound_ok = bound_ok && pt.joint_rate <= pt.analytic_bound + 3.0 * pt.joint_halfwidth;
        monotone_ok = monotone_ok && pt.joint_rate <= prev + 3.0 * (pt.joint_halfwidth + prev_hw);
        leakage_ok = leakage_ok && pt.leakage_bits <= 1.0;
        prev = pt.joint_rate;
        prev_hw = pt.joint_halfwidth;
    }
    const double elapsed = seconds_since(t0);
    report(9, verbatim_undefined && oracle_ok && bound_ok && monotone_ok && leakage_ok &&
                  elapsed < 300.0,
           "regime-1 lattice scheme: exhaustive noiseless oracle, error under the "
           "analytic bound and nonincreasing, leakage <= 1 bit (" +
               std::to_string(elapsed).substr(0, 5) + " s)");
}

void criterion_10() {
    SchemeConfig a{SchemeKind::JamR1Fp, ChannelParams{r(2), r(3, 2)}};
    a.P = 1e10;
    const SimPoint pa = simulate(build_scheme(a), 50000, kDefaultSeed, 4);
    SchemeConfig b{SchemeKind::JamR2Fp, ChannelParams{r(6, 5), r(3, 2)}};
    b.P = 1e10;
    const SimPoint pb = simulate(build_scheme(b), 50000, kDefaultSeed, 4);
    const bool ok = std::fabs(pa.d1 - 0.5) < 0.05 && std::fabs(pa.d2 - 1.0) < 0.05 &&
                    std::fabs(pb.d1 - 0.0) < 0.05 && std::fabs(pb.d2 - 0.7) < 0.05;
    report(10, ok,
           "jamming rates at P=10^10 land within 0.05 of (1/2, 1) and (0, 7/10)");
}

void criterion_11() {
    const ChannelParams p{r(2), r(3, 2)};
    const BcZfReport rep = bc_zero_forcing(p, 1e10, 20000, kDefaultSeed, 2.0);
    const bool ok = rep.residual_cross_power < 1e-18 * std::pow(1e10, 1.5) &&
                    std::fabs(rep.d1 - 2.0) < 0.05 && std::fabs(rep.d2 - 1.0) < 0.05;
    report(11, ok,
           "broadcast zero-forcing: residual cross power below 1e-18*P^beta, "
           "rates within 0.05 of (2, 1)");
}

void criterion_12() {
    // The optimality (converse) claims quantify over all codes and cannot be
    // certified by simulation; the stand-ins are the combinatorial machinery
    // (criteria 4-6 above) plus this containment sweep.
    bool ok = true;
    for (long long an = 1; an <= 8 && ok; ++an)
        for (long long bn = 1; bn <= 8 && ok; ++bn) {
            const ChannelParams p{Rational(an, 2), Rational(bn, 2)};
            const auto ic_p = gdof_region(p, {Topology::IC, Csit::Perfect});
            const auto ic_fp = gdof_region(p, {Topology::IC, Csit::FinitePrecision});
            const auto bc_p = gdof_region(p, {Topology::BC, Csit::Perfect});
            const auto bc_fp = gdof_region(p, {Topology::BC, Csit::FinitePrecision});
            for (const auto& v : ic_fp.vertices) ok = ok && contains_point(ic_p, v);
            for (const auto& v : ic_p.vertices) ok = ok && contains_point(bc_p, v);
            for (const auto& v : ic_fp.vertices) ok = ok && contains_point(bc_fp, v);
            for (const auto& v : bc_fp.vertices) ok = ok && contains_point(bc_p, v);
        }
    report(12, ok,
           "converse not simulable; containment suite (fp inside perfect, IC inside "
           "BC) over the (0,4]^2 grid, with criteria 4-6 covering the sum-set machinery");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
