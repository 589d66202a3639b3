#pragma once

#include <utility>

#include "cartelfringe/params.hpp"

namespace cfm {

struct HorizonSolution {
    double t_c = 0.0;        // cartel depletion time in the share class
    double residual = 0.0;   // tau_c(t_c) at the returned root
    int iterations = 0;      // root-finder iterations spent
    std::pair<double, double> bracket{0.0, 0.0};  // final enclosing interval
};

// Residual of the share-class depletion-time equation:
//   tau_c(t) = t - s0_c*beta/(alpha-b) - C * t_f
//            - (b-k_c)/(2 r (alpha-b)) * (e^{r t_f} - 1) * e^{-r (t + t_f)},
// with t_f = s0_f/m_f and C = (alpha + k_c + beta*m_f - 2b)/(2 (alpha-b)).
//
// Derivation (from stock conservation over the share path): the cartel's
// stock splits into the simultaneous-extraction phase integral of
//   q(t) = (alpha - k_c - beta*m_f)/(2 beta) - ((b - k_c)/(2 beta)) e^{r (t - t_f - t_c)}
// over [0, t_f] plus (alpha-b)/beta * (t_c - t_f) for the limit-price tail:
//   A t_f - (B/r)(e^{-r t_c} - e^{-r (t_f + t_c)}) + (alpha-b)/beta (t_c - t_f) = s0_c.
// Multiplying by beta/(alpha-b) and collecting the t_f terms gives exactly
// the form above, with the (e^{r t_f} - 1) factor: the alternative sign
// (e^{-r t_f} - 1) fails this identity.
//
// tau_c is strictly increasing in t, negative at t = 0, and -> +infinity,
// so its positive root is unique.
double tau_c(double t, const MarketParams& p);

// Solves tau_c(t_c) = 0 on [t_f + 1e-9, t_hi] where
//   t_hi = t_f + s0_c*beta/(alpha-b) + C*t_f + (b-k_c)/(2 r (alpha-b))
// (the exponential term never exceeds its t-free envelope, so tau_c(t_hi) > 0).
// Requires conditions a1 and a4; asserts tau_c(t_f + eps) < 0.  Converges to
// |residual| <= 1e-12 * max(1, t_c).  Throws InfeasibleError with slack
// diagnostics when the preconditions fail or the bracket has no sign change.
HorizonSolution solve_t_c(const MarketParams& p);

// Same root on the full bracket (0, t_hi], without the a4/sign gating.  The
// root is unique on (0, inf) regardless of whether it exceeds t_f; sweeps use
// this to keep valuing the share class where the depletion ordering breaks.
// Still requires a1 (the limit-price tail must exist).
HorizonSolution solve_t_c_relaxed(const MarketParams& p);

}  // namespace cfm
