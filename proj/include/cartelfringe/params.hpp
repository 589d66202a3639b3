#pragma once

#include <stdexcept>
#include <string>

namespace cfm {

// Raised when a requested construction exists in the model but the supplied
// parameters put it outside its validity region (e.g. the limit-price phase
// when the double-cap condition fails).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All economic primitives of the market.  Units are abstract (currency per
// unit quantity, quantity stocks, flows per year); nothing is enforced
// dimensionally.  Defaults are the benchmark calibration.
struct MarketParams {
    double alpha = 225.5;  // choke price: demand vanishes at p = alpha
    double beta = 4.3;     // inverse-demand slope
    double b = 102.5;      // renewable-substitute cost; hard price cap
    double k_c = 18.0;     // cartel marginal extraction cost
    double k_f = 62.5;     // fringe marginal extraction cost
    double r = 0.028;      // discount rate per year
    double s0_c = 1212.0;  // cartel initial reserve
    double s0_f = 619.5;   // aggregate fringe initial reserve
    double m_f = 28.0;     // aggregate fringe capacity (flow bound)
    double m_c = 50.0;     // cartel capacity bound
};

struct Condition {
    bool holds = false;
    double slack = 0.0;  // >= 0 exactly when the condition holds
};

// Pass/fail record for every standing assumption, with the computed slack so
// callers can see how binding each condition is.  a5 needs the share-class
// depletion time and is therefore evaluated lazily.
struct AssumptionReport {
    Condition a1_double_cap;         // 2b - k_c <= alpha
    Condition a2_double_kf;          // 2k_f - k_c <= alpha
    Condition a3_share_lb_positive;  // alpha - beta*m_f - b > 0
    Condition a4_resource_order;     // s0_f/m_f < s0_c*beta/(alpha-beta*m_f-k_f)
    bool a5_pending = true;          // true until evaluate_a5 supplies t_c
    Condition a5_interior_share;     // meaningful only when !a5_pending

    bool all_hold() const {
        return a1_double_cap.holds && a2_double_kf.holds &&
               a3_share_lb_positive.holds && a4_resource_order.holds;
    }
};

// Checks hard constraints (positivity, finiteness, the cost ordering
// k_c < k_f < b < alpha, and the capacity bound m_c >= (alpha-k_f)/beta)
// and throws std::invalid_argument on any violation; then computes the slack
// of every soft assumption.  Pure and idempotent.
AssumptionReport validate(const MarketParams& p);

// Completes the report with the interior-share condition
//   b*(2 - e^{-r t_c}) > alpha - m_f*beta + k_c*(1 - e^{-r t_c}),
// which guarantees the unclipped share control stays above its lower bound.
Condition evaluate_a5(const MarketParams& p, double t_c);

// Inverse demand with the renewable cap: min(alpha - beta*(q_c + q_f), b).
// May go negative for very large joint output; capacity bounds keep
// equilibrium paths away from that region.
double price(double q_c, double q_f_total, const MarketParams& p);

}  // namespace cfm
