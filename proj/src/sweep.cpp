#include "cartelfringe/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cfm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double axis_value(const AxisSpec& axis, int i) {
    return axis.lo + (axis.hi - axis.lo) * i / double(axis.n - 1);
}

void check_axis(const AxisSpec& axis) {
    if (axis.n < 2) throw std::invalid_argument("axis needs n >= 2");
    if (!(axis.lo < axis.hi)) throw std::invalid_argument("axis needs lo < hi");
    MarketParams probe;
    if (!set_param(probe, axis.name, axis.lo))
        throw std::invalid_argument("unknown sweep parameter \"" + axis.name + "\"");
}

// Evaluates one parameter point into a cell (coords filled by the caller).
void eval_cell(SweepCell& cell, const MarketParams& p) {
    if (p.m_f >= (p.alpha - p.b) / p.beta) {
        cell.valid = false;
        cell.pi1 = cell.pi2 = cell.pi3 = kNaN;
        cell.reason = "m_f at or above the hard cap (alpha - b)/beta";
        return;
    }
    try {
        validate(p);
    } catch (const std::invalid_argument& e) {
        cell.valid = false;
        cell.pi1 = cell.pi2 = cell.pi3 = kNaN;
        cell.reason = e.what();
        return;
    }
    const StrategyComparison cmp = select_strategy(p);
    cell.valid = true;
    cell.pi1 = cmp.outcomes[0].has_value ? cmp.outcomes[0].profit : kNaN;
    cell.pi2 = cmp.outcomes[1].has_value ? cmp.outcomes[1].profit : kNaN;
    cell.pi3 = cmp.outcomes[2].has_value ? cmp.outcomes[2].profit : kNaN;
    cell.best = cmp.best ? to_string(*cmp.best) : "";
    std::string notes;
    for (const StrategyOutcome& o : cmp.outcomes) {
        if (o.reason.empty()) continue;
        if (!notes.empty()) notes += "; ";
        notes += std::string(to_string(o.class_id)) + ": " + o.reason;
    }
    cell.reason = notes;
}

double profit_of(const StrategyComparison& cmp, StrategyClass c) {
    for (const StrategyOutcome& o : cmp.outcomes)
        if (o.class_id == c) return o.has_value ? o.profit : kNaN;
    return kNaN;
}

}  // namespace

bool set_param(MarketParams& p, const std::string& name, double value) {
    if (name == "alpha") p.alpha = value;
    else if (name == "beta") p.beta = value;
    else if (name == "b") p.b = value;
    else if (name == "k_c") p.k_c = value;
    else if (name == "k_f") p.k_f = value;
    else if (name == "r") p.r = value;
    else if (name == "s0_c") p.s0_c = value;
    else if (name == "s0_f") p.s0_f = value;
    else if (name == "m_f") p.m_f = value;
    else if (name == "m_c") p.m_c = value;
    else return false;
    return true;
}

SweepGrid sweep_1d(const AxisSpec& axis, const MarketParams& base) {
    check_axis(axis);
    SweepGrid grid;
    grid.axes = {axis};
    grid.cells.reserve(axis.n);
    for (int i = 0; i < axis.n; ++i) {
        const double v = axis_value(axis, i);
        MarketParams p = base;
        set_param(p, axis.name, v);
        SweepCell cell;
        cell.coords = {v};
        eval_cell(cell, p);
        grid.cells.push_back(std::move(cell));
    }
    return grid;
}

SweepGrid classify_regions(const AxisSpec& kf_axis, const AxisSpec& kc_axis,
                           const MarketParams& base) {
    check_axis(kf_axis);
    check_axis(kc_axis);
    if (kf_axis.name != "k_f" || kc_axis.name != "k_c")
        throw std::invalid_argument("classify_regions sweeps k_f (outer) and k_c (inner)");
    SweepGrid grid;
    grid.axes = {kf_axis, kc_axis};
    grid.cells.reserve(size_t(kf_axis.n) * kc_axis.n);
    for (int i = 0; i < kf_axis.n; ++i) {
        const double kf = axis_value(kf_axis, i);
        for (int j = 0; j < kc_axis.n; ++j) {
            const double kc = axis_value(kc_axis, j);
            SweepCell cell;
            cell.coords = {kf, kc};
            if (kc >= kf) {
                cell.valid = false;
                cell.pi1 = cell.pi2 = cell.pi3 = kNaN;
                cell.reason = "domain exclusion: k_c >= k_f";
            } else {
                MarketParams p = base;
                p.k_f = kf;
                p.k_c = kc;
                eval_cell(cell, p);
            }
            grid.cells.push_back(std::move(cell));
        }
    }
    return grid;
}

RegionBoundary trace_boundary(StrategyClass class_i, StrategyClass class_j,
                              const AxisSpec& kf_axis, const MarketParams& base) {
    check_axis(kf_axis);
    auto pi_name = [](StrategyClass c) {
        switch (c) {
            case StrategyClass::Deter: return "pi1";
            case StrategyClass::Share: return "pi2";
            case StrategyClass::Wait: return "pi3";
        }
        return "?";
    };
    RegionBoundary boundary;
    boundary.name = std::string(pi_name(class_i)) + "=" + pi_name(class_j);
    boundary.tol_kc = 1e-8;

    for (int i = 0; i < kf_axis.n; ++i) {
        const double kf = axis_value(kf_axis, i);
        auto diff = [&](double kc) {
            MarketParams p = base;
            p.k_f = kf;
            p.k_c = kc;
            try {
                validate(p);
            } catch (const std::invalid_argument&) {
                return kNaN;
            }
            const StrategyComparison cmp = select_strategy(p);
            return profit_of(cmp, class_i) - profit_of(cmp, class_j);
        };
        // Coarse scan for a sign change between valid samples, then bisect.
        const int scan = 64;
        const double kc_lo = 1e-3, kc_hi = kf - 1e-3;
        if (!(kc_lo < kc_hi)) continue;
        double prev_kc = kNaN, prev_f = kNaN;
        for (int s = 0; s <= scan; ++s) {
            const double kc = kc_lo + (kc_hi - kc_lo) * s / double(scan);
            const double f = diff(kc);
            if (std::isfinite(prev_f) && std::isfinite(f) &&
                ((prev_f < 0.0) != (f < 0.0))) {
                double a = prev_kc, b = kc, fa = prev_f;
                while (b - a > boundary.tol_kc) {
                    const double m = 0.5 * (a + b);
                    const double fm = diff(m);
                    if (!std::isfinite(fm)) break;
                    if ((fm < 0.0) == (fa < 0.0)) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                boundary.points.emplace_back(kf, 0.5 * (a + b));
                break;  // one crossing per k_f sample
            }
            prev_kc = kc;
            prev_f = f;
        }
    }
    return boundary;
}

}  // namespace cfm
