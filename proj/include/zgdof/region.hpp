#ifndef ZGDOF_REGION_HPP
#define ZGDOF_REGION_HPP

// Exact secure-GDoF region computation for the Z-interference channel (ZIC,
// separate encoders) and the Z-broadcast channel (ZBC, joint encoder) under
// perfect and finite-precision CSIT: regime classification, region polytopes
// in rational arithmetic, and optimization queries over those polytopes.

#include <optional>
#include <string>
#include <vector>

#include "zgdof/rational.hpp"

namespace zgdof {

// Channel-strength exponents. The direct link Tx2->Rx2 is normalized to
// exponent 1; alpha is Tx1->Rx1, beta is the cross link Tx2->Rx1.
struct ChannelParams {
    Rational alpha;
    Rational beta;

    ChannelParams() : alpha(0), beta(0) {}
    ChannelParams(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha < 0 || beta < 0)
            throw ConfigError("channel exponents must be nonnegative");
    }

    Rational mu() const { return beta - alpha; }          // beta - alpha
    Rational mu_bar() const { return positive_part(beta - alpha); }   // (beta-alpha)+
    Rational mu_under() const { return positive_part(alpha - beta); } // (alpha-beta)+
};

enum class Topology { IC, BC };
enum class Csit { Perfect, FinitePrecision };

struct ScenarioTag {
    Topology topology;
    Csit csit;
};

enum class Regime { R1, R2, R3, R4, BCdegenerate };

// Regime plus a record of which boundary equalities held, so callers can
// see when a point sits exactly on a cell edge.
struct RegimeId {
    Regime id;
    bool on_beta_one = false;            // beta == 1
    bool on_alpha_eq_beta = false;       // alpha == beta
    bool on_alpha_eq_beta_minus_1 = false; // alpha == beta - 1
};

std::string regime_name(Regime r);

struct Point {
    Rational d1;
    Rational d2;
    bool operator==(const Point& o) const { return d1 == o.d1 && d2 == o.d2; }
};

// Half-space a1*d1 + a2*d2 <= b.
struct Halfspace {
    Rational a1, a2, b;
};

struct GdofRegion {
    ChannelParams params;
    ScenarioTag scenario;
    RegimeId regime;
    std::vector<Halfspace> halfspaces; // always includes d1 >= 0, d2 >= 0
    std::vector<Point> vertices;       // counterclockwise, lexicographic-min first
};

struct WeightVector {
    Rational w1, w2;
    WeightVector(Rational a, Rational b) : w1(std::move(a)), w2(std::move(b)) {
        if (w1 < 0 || w2 < 0 || (w1 == 0 && w2 == 0))
            throw ConfigError("weights must be nonnegative and not both zero");
    }
};

struct MaxResult {
    Rational value;
    Point argmax;
};

RegimeId classify_regime(const ChannelParams& params, const ScenarioTag& scenario);

GdofRegion gdof_region(const ChannelParams& params, const ScenarioTag& scenario);

// Enumerates the vertices of an intersection of half-spaces (all pairwise
// boundary intersections, filtered for feasibility). Exposed so tests can
// cross-check stored vertices against a re-derivation.
std::vector<Point> enumerate_vertices(const std::vector<Halfspace>& halfspaces);

// Exact maximum of w1*d1 + w2*d2 over the region, optionally intersected
// with the line d2 = *d2_constraint. Ties broken toward larger d1.
MaxResult weighted_max(const GdofRegion& region, const WeightVector& w,
                       const std::optional<Rational>& d2_constraint = std::nullopt);

// Ratio of the finite-precision to the perfect-CSIT weighted maximum for
// the ZIC at the given weight (two weighted_max calls).
Rational fp_to_p_ratio(const ChannelParams& params, const WeightVector& w);

struct RatioRow {
    Rational alpha, beta, w1, w2, ratio;
};

struct RatioScanResult {
    Rational min_ratio;
    RatioRow argmin;
    std::vector<RatioRow> table;
};

// Exhaustive exact evaluation of fp_to_p_ratio over the product grid.
// Points where the perfect-CSIT maximum is zero are skipped. When
// add_extremal_weights is set, the per-point weights (alpha-1, 1) and
// (1, alpha-1) are appended for alpha > 1; the second ordering is the one
// whose ratio actually approaches the extremal value 1/2 (see the README
// note on the near-diagonal family).
RatioScanResult ratio_scan(const std::vector<Rational>& alpha_grid,
                           const std::vector<Rational>& beta_grid,
                           const std::vector<WeightVector>& weight_grid,
                           bool add_extremal_weights = false);

} // namespace zgdof

#endif // ZGDOF_REGION_HPP
