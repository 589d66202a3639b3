#include "cartelfringe/horizon.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "cartelfringe/fringe.hpp"

namespace cfm {

namespace {

double tf_coef(const MarketParams& p) {
    return (p.alpha + p.k_c + p.beta * p.m_f - 2.0 * p.b) / (2.0 * (p.alpha - p.b));
}

double upper_bracket(const MarketParams& p, double t_f) {
    return t_f + p.s0_c * p.beta / (p.alpha - p.b) + tf_coef(p) * t_f +
           (p.b - p.k_c) / (2.0 * p.r * (p.alpha - p.b));
}

void require_a1(const MarketParams& p) {
    if (2.0 * p.b - p.k_c > p.alpha)
        throw InfeasibleError("horizon equation undefined: condition a1 fails "
                              "(no limit-price tail)");
}

// Bisection with secant polishing on a bracket with f(lo) <= 0 <= f(hi).
HorizonSolution find_root(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    int iters = 2;
    // 1e-13 absolute: tau_c has slope >= 1 near the root, so the secant steps
    // reach this comfortably and downstream consumers get |residual| < 1e-12
    // in absolute terms, not just relative to t.
    auto tol = [](double) { return 1e-13; };

    double t = 0.5 * (lo + hi), ft = 0.0;
    for (int i = 0; i < 200; ++i) {
        ft = f(t);
        ++iters;
        if (std::fabs(ft) <= tol(t)) break;
        if (ft > 0.0) {
            hi = t;
            fhi = ft;
        } else {
            lo = t;
            flo = ft;
        }
        // Secant proposal from the bracket endpoints; fall back to bisection
        // whenever it leaves the bracket (f is monotone, so this converges).
        double next = 0.5 * (lo + hi);
        if (fhi != flo) {
            const double sec = (lo * fhi - hi * flo) / (fhi - flo);
            if (sec > lo && sec < hi) next = sec;
        }
        if (hi - lo <= 1e-15 * std::max(1.0, hi)) {
            t = next;
            ft = f(t);
            ++iters;
            break;
        }
        t = next;
    }
    return {t, ft, iters, {lo, hi}};
}

}  // namespace

double tau_c(double t, const MarketParams& p) {
    const double t_f = fringe_depletion_time(p);
    return t - p.s0_c * p.beta / (p.alpha - p.b) - tf_coef(p) * t_f -
           (p.b - p.k_c) / (2.0 * p.r * (p.alpha - p.b)) *
               (std::exp(p.r * t_f) - 1.0) * std::exp(-p.r * (t + t_f));
}

HorizonSolution solve_t_c(const MarketParams& p) {
    require_a1(p);
    const double t_f = fringe_depletion_time(p);
    const double denom = p.alpha - p.beta * p.m_f - p.k_f;
    if (!(denom > 0.0) || !(t_f < p.s0_c * p.beta / denom)) {
        std::ostringstream msg;
        msg << "share-class depletion ordering (a4) fails: t_f = " << t_f
            << " vs bound " << (denom > 0.0 ? p.s0_c * p.beta / denom : 0.0)
            << "; the cartel would deplete before the fringe";
        throw InfeasibleError(msg.str());
    }
    const double lo = t_f + 1e-9;
    const double hi = upper_bracket(p, t_f);
    auto f = [&](double t) { return tau_c(t, p); };
    const double flo = f(lo);
    if (!(flo < 0.0)) {
        std::ostringstream msg;
        msg << "tau_c(t_f + eps) = " << flo
            << " >= 0: no root above t_f (depletion-ordering diagnostics: a4 slack = "
            << (p.s0_c * p.beta / denom - t_f) << ")";
        throw InfeasibleError(msg.str());
    }
    if (!(f(hi) > 0.0))
        throw InfeasibleError("tau_c upper bracket is not positive; no sign change");
    return find_root(f, lo, hi);
}

HorizonSolution solve_t_c_relaxed(const MarketParams& p) {
    require_a1(p);
    const double t_f = fringe_depletion_time(p);
    const double hi = upper_bracket(p, t_f);
    auto f = [&](double t) { return tau_c(t, p); };
    // tau_c(0) = -s0_c*beta/(alpha-b) - C*t_f - positive term < 0 always.
    return find_root(f, 0.0, hi);
}

}  // namespace cfm
