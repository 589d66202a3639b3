#pragma once

#include "cartelfringe/params.hpp"

namespace cfm {

// Market regimes: F — only the fringe extracts; C — cartel alone at the
// fringe-exclusion price k_f; S — simultaneous extraction below the cap;
// L — cartel alone at the cap price b.
enum class PhaseLabel { F, C, S, L };

char to_char(PhaseLabel ph);

// Constant discounted shadow price of the cartel's stock along an optimal
// share-class path.
struct Costate {
    double gamma_c = 0.0;
};

// Raised when the share-phase control leaves its admissible interval from
// above, which would contradict the fringe reaction structure.
struct ShareBoundError : InfeasibleError {
    using InfeasibleError::InfeasibleError;
};

// Deter-class constant control (alpha - k_f)/beta: floods the market so the
// price sits exactly at the fringe cost and the fringe stays out.
double deter_control(const MarketParams& p);

// Deter-class depletion time s0_c * beta / (alpha - k_f).
double deter_depletion(const MarketParams& p);

// Limit-price (phase L) constant control (alpha - b)/beta, valid under the
// double-cap condition a1; otherwise the optimal path would contain an
// interior segment this solver deliberately does not model.
double limit_price_control(const MarketParams& p);

// Wait-class depletion time T^f + s0_c * beta / (alpha - b).
double wait_depletion(const MarketParams& p);

// gamma_c = (b - k_c) e^{-r (t_f + t_c)}.
Costate costate_share(double t_f, double t_c, const MarketParams& p);

// Admissible share-phase control interval: the cartel must keep the fringe
// at full capacity without pushing the price to b or to k_f.
double share_lower_bound(const MarketParams& p);  // (alpha - b - beta*m_f)/beta
double share_upper_bound(const MarketParams& p);  // (alpha - k_f - beta*m_f)/beta

// Share-phase control at time t in [0, t_f]:
//   interior  q(t) = (alpha - k_c - beta*m_f)/(2 beta)
//                  - ((b - k_c)/(2 beta)) e^{r (t - t_f - t_c)},
// clipped from below at share_lower_bound (the clip is active exactly when
// the interior-share condition a5 fails near t_f).  Throws std::out_of_range
// for t outside [0, t_f] and ShareBoundError if the value would exceed
// share_upper_bound.
double share_control(double t, double t_f, double t_c, const MarketParams& p);

// First time in [0, t_f] at which the interior control reaches the lower
// bound; t_f if it never does within the phase.  The control is clipped on
// [clip, t_f].
double share_clip_time(double t_f, double t_c, const MarketParams& p);

// Closed-form integral of share_control over [0, t], 0 <= t <= t_f,
// honoring the clip.
double share_stock_extracted(double t, double t_f, double t_c, const MarketParams& p);

// Closed-form discounted cartel profit accumulated over [0, t] of the share
// phase, honoring the clip.  Uses the identity p - k_c = beta (A + B u) for
// the interior control, so the integrand reduces to beta e^{-rt}(A^2 - B^2 u^2).
double share_cum_profit(double t, double t_f, double t_c, const MarketParams& p);

}  // namespace cfm
