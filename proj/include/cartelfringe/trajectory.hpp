#pragma once

#include <vector>

#include "cartelfringe/params.hpp"
#include "cartelfringe/phases.hpp"
#include "cartelfringe/strategy.hpp"

namespace cfm {

struct PriceJump {
    double t;
    double p_left;
    double p_right;
};

// Sampled time series for one strategy outcome.  Phase boundaries appear
// twice in the grid (left and right limits) so discontinuities plot exactly.
struct Trajectory {
    std::vector<double> t;
    std::vector<PhaseLabel> phase;
    std::vector<double> q_c;
    std::vector<double> q_f_total;
    std::vector<double> p;
    std::vector<double> s_c;
    std::vector<double> s_f;
    std::vector<double> cum_profit;
    std::vector<PriceJump> jumps;
};

// Materializes `outcome` into a trajectory with `n_points` samples per phase
// (n_points >= 2).  Stocks and accumulated profit use the closed-form
// antiderivatives of the piecewise controls; jumps are recorded where
// |p_right - p_left| > 1e-9 * b.  After the deter-class depletion the fringe
// re-enters, so that trajectory ends with a duplicated point carrying the
// post-depletion state.  Throws InfeasibleError for outcomes that are not
// feasible equilibrium paths and std::invalid_argument for n_points < 2.
Trajectory render(const StrategyOutcome& outcome, const MarketParams& p, int n_points);

}  // namespace cfm
