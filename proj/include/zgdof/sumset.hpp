#ifndef ZGDOF_SUMSET_HPP
#define ZGDOF_SUMSET_HPP

// Combinatorial core of the aligned-images sum-set machinery: box-stacking
// feasibility, the circular sliding-window inequality construction, and
// small-scale empirical entropy validation.

#include <cstdint>
#include <string>
#include <vector>

#include "zgdof/detmodel.hpp"
#include "zgdof/rational.hpp"

namespace zgdof {

enum class BoxSource { T, U };

// A sub-section of one of the two source signals: occupies the level
// interval [level, level + height) within its source.
struct Box {
    std::string id;
    BoxSource source;
    Rational level;  // original level, >= 0
    Rational height; // > 0 (zero-height sub-sections are treated as absent)
};

struct StackingProblem {
    std::vector<Box> boxes;
    std::vector<std::string> query; // distinct ids drawn from boxes
};

struct StackResult {
    bool feasible;
    std::vector<std::string> order; // witnessing order when feasible
};

// A stacking order is admissible when no box is lifted above its original
// level: box pi(i) lands at the summed height of its predecessors, and that
// landing spot must not exceed level(pi(i)). Feasible iff some order is
// admissible.
//
// Greedy rule: sort by original top edge (level + height) ascending, ties by
// id. Equivalently earliest-deadline-first with deadline = original top:
// the landing constraint says each box must FINISH at or below its original
// top, so deadline scheduling applies and an adjacent-swap exchange argument
// shows the sort is exact. Sorting by level alone is not exact; see the
// regression test with boxes (level 5, height 1) and (level 1, height 6).
StackResult stacking_feasible(const StackingProblem& problem);

// Independent oracle: tries all |query|! permutations. |query| <= 10.
bool brute_force_feasible(const StackingProblem& problem);

struct WindowPlan {
    Rational p, q, mu, nu;
    Rational slice_height;        // largest l with p/l and q/l integral
    long ptilde = 0, qtilde = 0;  // p = ptilde*l, q = qtilde*l, lowest terms
    std::vector<Box> boxes;       // 2*ptilde slices, ids A1..A{2*ptilde}
    std::vector<std::vector<int>> windows; // 2*ptilde circular windows, 1-based
};

// Builds the sliding-window decomposition behind the sum-set inequality:
// slices 1..ptilde cover the top-p band of T (below its reserved top-mu),
// slices ptilde+1..2*ptilde do the same for U, and every circular window of
// qtilde consecutive slices must stack. An infeasible window would mean an
// implementation bug, so that case throws logic_error rather than a domain
// error.
WindowPlan sliding_window_plan(const Rational& p, const Rational& q,
                               const Rational& mu, const Rational& nu);

struct InequalityStatement {
    Rational lhs_coeff; // 2p
    Rational rhs_coeff; // q
    std::string conditioning;
    std::string text; // deterministic rendering
};

InequalityStatement sumset_inequality(const WindowPlan& plan);

enum class InputDistribution { IndependentUniform, Aligned, Zero };

struct EntropyCheckReport {
    double lhs_bits = 0;       // mean of 2p * H(V | tops) over gain draws
    double rhs_bits = 0;       // q * H(top sections | tops), gain-free
    double gap_bits = 0;       // lhs - rhs
    double normalized_gap = 0; // gap / log2(pbar(1))
    bool exact = false;
    std::size_t gain_draws = 0;
};

// Numerical sanity harness for the sum-set inequality. Exact mode
// enumerates the full joint input distribution (guarded at 1e6 outcomes);
// sampling mode uses plug-in estimates. The o(log pbar) slack makes this a
// trend check, not a proof: callers should compare normalized gaps across a
// pbar grid rather than asserting nonnegativity at one P.
EntropyCheckReport empirical_entropy_check(const WindowPlan& plan,
                                           const PowerContext& ctx,
                                           InputDistribution dist,
                                           bool exact,
                                           std::size_t trials,
                                           const GainEnsemble& gains);

} // namespace zgdof

#endif // ZGDOF_SUMSET_HPP
