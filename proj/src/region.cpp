#include "zgdof/region.hpp"

#include <algorithm>
#include <set>

namespace zgdof {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::R1: return "R1";
        case Regime::R2: return "R2";
        case Regime::R3: return "R3";
        case Regime::R4: return "R4";
        case Regime::BCdegenerate: return "BCdeg";
    }
    return "?";
}

RegimeId classify_regime(const ChannelParams& p, const ScenarioTag& scenario) {
    RegimeId out{Regime::R4};
    out.on_beta_one = (p.beta == 1);
    out.on_alpha_eq_beta = (p.alpha == p.beta);
    out.on_alpha_eq_beta_minus_1 = (p.alpha == p.beta - 1);

    if (p.beta <= 1) {
        out.id = Regime::R4; // includes the boundary beta = 1
        return out;
    }
    if (p.alpha <= p.beta - 1) {
        // BC: the joint encoder collapses this cell to a single degenerate
        // branch (Tx2 carries user 1's message); keep the label distinct.
        out.id = (scenario.topology == Topology::BC) ? Regime::BCdegenerate : Regime::R3;
        return out;
    }
    out.id = (p.alpha <= p.beta) ? Regime::R2 : Regime::R1;
    return out;
}

namespace {

// Intersection point of two half-space boundaries, if unique.
std::optional<Point> boundary_intersection(const Halfspace& h1, const Halfspace& h2) {
    const Rational det = h1.a1 * h2.a2 - h1.a2 * h2.a1;
    if (det == 0) return std::nullopt;
    return Point{(h1.b * h2.a2 - h1.a2 * h2.b) / det,
                 (h1.a1 * h2.b - h1.b * h2.a1) / det};
}

bool satisfies_all(const Point& pt, const std::vector<Halfspace>& hs) {
    for (const auto& h : hs)
        if (h.a1 * pt.d1 + h.a2 * pt.d2 > h.b) return false;
    return true;
}

bool lex_less(const Point& a, const Point& b) {
    return a.d1 != b.d1 ? a.d1 < b.d1 : a.d2 < b.d2;
}

// Counterclockwise order around the centroid, then rotated so the
// lexicographically smallest vertex comes first (deterministic output).
void order_ccw(std::vector<Point>& pts) {
    if (pts.size() < 3) {
        std::sort(pts.begin(), pts.end(), lex_less);
        return;
    }
    Rational cx(0), cy(0);
    for (const auto& p : pts) { cx += p.d1; cy += p.d2; }
    const Rational n(static_cast<long>(pts.size()));
    cx /= n; cy /= n;

    auto half = [&](const Point& p) {
        const Rational dy = p.d2 - cy;
        const Rational dx = p.d1 - cx;
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1; // upper half first
    };
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const Rational cross = (a.d1 - cx) * (b.d2 - cy) - (a.d2 - cy) * (b.d1 - cx);
        if (cross != 0) return cross > 0;
        return lex_less(a, b);
    });
    auto first = std::min_element(pts.begin(), pts.end(), lex_less);
    std::rotate(pts.begin(), first, pts.end());
}

bool collinear(const std::vector<Point>& pts) {
    if (pts.size() < 3) return true;
    for (std::size_t i = 2; i < pts.size(); ++i) {
        const Rational cross = (pts[1].d1 - pts[0].d1) * (pts[i].d2 - pts[0].d2)
                             - (pts[1].d2 - pts[0].d2) * (pts[i].d1 - pts[0].d1);
        if (cross != 0) return false;
    }
    return true;
}

} // namespace

std::vector<Point> enumerate_vertices(const std::vector<Halfspace>& halfspaces) {
    std::vector<Point> found;
    for (std::size_t i = 0; i < halfspaces.size(); ++i) {
        for (std::size_t j = i + 1; j < halfspaces.size(); ++j) {
            auto pt = boundary_intersection(halfspaces[i], halfspaces[j]);
            if (!pt || !satisfies_all(*pt, halfspaces)) continue;
            if (std::find(found.begin(), found.end(), *pt) == found.end())
                found.push_back(*pt);
        }
    }
    if (collinear(found)) std::sort(found.begin(), found.end(), lex_less);
    else order_ccw(found);
    return found;
}

GdofRegion gdof_region(const ChannelParams& p, const ScenarioTag& scenario) {
    GdofRegion region{p, scenario, classify_regime(p, scenario), {}, {}};
    auto& hs = region.halfspaces;
    hs.push_back({-1, 0, 0}); // d1 >= 0
    hs.push_back({0, -1, 0}); // d2 >= 0

    const Rational one(1);
    const bool fp = scenario.csit == Csit::FinitePrecision;

    auto add_segment_d2_zero = [&](const Rational& d1cap) {
        // Degenerate region {0 <= d1 <= cap, d2 = 0}: the equality is two
        // opposing half-spaces so the polytope code path stays uniform.
        hs.push_back({1, 0, d1cap});
        hs.push_back({0, 1, 0});
    };

    if (scenario.topology == Topology::IC) {
        if (!fp) {
            // d1 <= alpha; d2 <= min{1, (1+alpha-beta)+}; d1+d2 <= alpha+(1-beta)+.
            hs.push_back({1, 0, p.alpha});
            hs.push_back({0, 1, std::min(one, positive_part(1 + p.alpha - p.beta))});
            hs.push_back({1, 1, p.alpha + positive_part(1 - p.beta)});
        } else {
            switch (region.regime.id) {
                case Regime::R1: // 1 < beta < alpha
                    hs.push_back({0, 1, one});
                    hs.push_back({1, p.beta, p.alpha});
                    break;
                case Regime::R2: // 1 < beta, beta-1 < alpha <= beta:
                    // d1/alpha + d2/(1+alpha-beta) <= 1, cleared of denominators.
                    hs.push_back({1 + p.alpha - p.beta, p.alpha,
                                  p.alpha * (1 + p.alpha - p.beta)});
                    break;
                case Regime::R3: // 1 < beta, alpha <= beta-1: segment d2 = 0
                    add_segment_d2_zero(p.alpha);
                    break;
                default: // R4: 0 <= beta <= 1
                    hs.push_back({1, 0, p.alpha});
                    hs.push_back({0, 1, one});
                    hs.push_back({1, 1, 1 + p.alpha - p.beta});
                    break;
            }
        }
    } else { // BC
        if (!fp) {
            hs.push_back({1, 0, std::max(p.alpha, Rational(p.beta - 1))});
            hs.push_back({0, 1, positive_part(1 - positive_part(p.beta - p.alpha))});
        } else if (region.regime.id == Regime::BCdegenerate) {
            add_segment_d2_zero(p.beta - 1);
        } else {
            // Outside the degenerate cell the fp BC region equals the fp IC
            // region (the joint encoder buys nothing without CSIT precision).
            GdofRegion ic = gdof_region(p, {Topology::IC, Csit::FinitePrecision});
            region.halfspaces = ic.halfspaces;
            region.vertices = enumerate_vertices(region.halfspaces);
            return region;
        }
    }

    region.vertices = enumerate_vertices(region.halfspaces);
    return region;
}

MaxResult weighted_max(const GdofRegion& region, const WeightVector& w,
                       const std::optional<Rational>& d2_constraint) {
    std::vector<Point> candidates;
    if (d2_constraint) {
        auto hs = region.halfspaces;
        hs.push_back({0, 1, *d2_constraint});
        hs.push_back({0, -1, -*d2_constraint});
        candidates = enumerate_vertices(hs);
        if (candidates.empty())
            throw EmptyIntersection("constraint line d2 = " +
                                    rational_to_string(*d2_constraint) +
                                    " does not intersect the region");
    } else {
        candidates = region.vertices;
        if (candidates.empty())
            throw EmptyIntersection("region has no vertices");
    }
    MaxResult best{w.w1 * candidates[0].d1 + w.w2 * candidates[0].d2, candidates[0]};
    for (const auto& pt : candidates) {
        const Rational val = w.w1 * pt.d1 + w.w2 * pt.d2;
        if (val > best.value || (val == best.value && pt.d1 > best.argmax.d1))
            best = {val, pt};
    }
    return best;
}

Rational fp_to_p_ratio(const ChannelParams& params, const WeightVector& w) {
    const auto perfect = weighted_max(gdof_region(params, {Topology::IC, Csit::Perfect}), w);
    if (perfect.value == 0)
        throw UndefinedRatio("perfect-CSIT weighted maximum is zero");
    const auto fp = weighted_max(
        gdof_region(params, {Topology::IC, Csit::FinitePrecision}), w);
    return fp.value / perfect.value;
}

RatioScanResult ratio_scan(const std::vector<Rational>& alpha_grid,
                           const std::vector<Rational>& beta_grid,
                           const std::vector<WeightVector>& weight_grid,
                           bool add_extremal_weights) {
    if (alpha_grid.empty() || beta_grid.empty() ||
        (weight_grid.empty() && !add_extremal_weights))
        throw ConfigError("ratio_scan: empty grid");

    RatioScanResult result;
    bool first = true;
    for (const auto& alpha : alpha_grid) {
        std::vector<WeightVector> weights = weight_grid;
        if (add_extremal_weights && alpha > 1) {
            weights.emplace_back(alpha - 1, Rational(1));
            weights.emplace_back(Rational(1), alpha - 1);
        }
        for (const auto& beta : beta_grid) {
            const ChannelParams params{alpha, beta};
            for (const auto& w : weights) {
                Rational ratio;
                try {
                    ratio = fp_to_p_ratio(params, w);
                } catch (const UndefinedRatio&) {
                    continue; // grid restricted to points where d_p > 0
                }
                RatioRow row{alpha, beta, w.w1, w.w2, ratio};
                result.table.push_back(row);
                if (first || ratio < result.min_ratio) {
                    result.min_ratio = ratio;
                    result.argmin = row;
                    first = false;
                }
            }
        }
    }
    if (first) throw ConfigError("ratio_scan: no grid point with positive perfect maximum");
    return result;
}

} // namespace zgdof
