#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cartelfringe/params.hpp"
#include "cartelfringe/strategy.hpp"

namespace cfm {

struct AxisSpec {
    std::string name;  // a MarketParams field name
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

// One grid cell: the swept coordinates, the three profits (NaN when the
// class has no value there), the best class name, and a validity flag with a
// reason.  Invalid cells stay in the grid so plots can grey them out.
struct SweepCell {
    std::vector<double> coords;
    double pi1 = 0.0;
    double pi2 = 0.0;
    double pi3 = 0.0;
    std::string best;  // "deter" / "share" / "wait" / "" when nothing valued
    bool valid = false;
    std::string reason;  // hard-validation failure, or per-class feasibility notes
};

struct SweepGrid {
    std::vector<AxisSpec> axes;
    std::vector<SweepCell> cells;  // row-major over the axes
};

// Numeric curve of profit indifference between two classes in the
// (k_f, k_c) plane.
struct RegionBoundary {
    std::string name;  // e.g. "pi1=pi2"
    std::vector<std::pair<double, double>> points;  // (k_f, k_c) crossings
    double tol_kc = 0.0;  // bisection tolerance in k_c
};

// Assigns `value` to the named field; returns false for unknown names.
bool set_param(MarketParams& p, const std::string& name, double value);

// One-dimensional sensitivity sweep of `axis.name` with everything else held
// at `base`.  m_f sweeps enforce the hard cap m_f < (alpha - b)/beta.
SweepGrid sweep_1d(const AxisSpec& axis, const MarketParams& base);

// Strategy-region classification over (k_f, k_c); cells with k_c >= k_f or a
// hard validation failure are marked invalid.  Row-major with k_f outer.
SweepGrid classify_regions(const AxisSpec& kf_axis, const AxisSpec& kc_axis,
                           const MarketParams& base);

// For each sampled k_f, bisects in k_c for the sign change of
// profit(class_i) - profit(class_j) to 1e-8 absolute in k_c.  A k_f with no
// sign change contributes no point; an entirely empty boundary is a valid
// result, not an error.
RegionBoundary trace_boundary(StrategyClass class_i, StrategyClass class_j,
                              const AxisSpec& kf_axis, const MarketParams& base);

}  // namespace cfm
