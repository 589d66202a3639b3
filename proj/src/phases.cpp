#include "cartelfringe/phases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfm {

namespace {

double interior_amplitude(const MarketParams& p) {  // A
    return (p.alpha - p.k_c - p.beta * p.m_f) / (2.0 * p.beta);
}

double interior_decay(const MarketParams& p) {  // B
    return (p.b - p.k_c) / (2.0 * p.beta);
}

}  // namespace

char to_char(PhaseLabel ph) {
    switch (ph) {
        case PhaseLabel::F: return 'F';
        case PhaseLabel::C: return 'C';
        case PhaseLabel::S: return 'S';
        case PhaseLabel::L: return 'L';
    }
    return '?';
}

double deter_control(const MarketParams& p) { return (p.alpha - p.k_f) / p.beta; }

double deter_depletion(const MarketParams& p) {
    return p.s0_c * p.beta / (p.alpha - p.k_f);
}

double limit_price_control(const MarketParams& p) {
    if (2.0 * p.b - p.k_c > p.alpha)
        throw InfeasibleError(
            "limit-price phase undefined: 2b - k_c > alpha (condition a1 fails), "
            "the optimal path would contain an unmodeled interior segment");
    return (p.alpha - p.b) / p.beta;
}

double wait_depletion(const MarketParams& p) {
    return p.s0_f / p.m_f + p.s0_c * p.beta / (p.alpha - p.b);
}

Costate costate_share(double t_f, double t_c, const MarketParams& p) {
    return {(p.b - p.k_c) * std::exp(-p.r * (t_f + t_c))};
}

double share_lower_bound(const MarketParams& p) {
    return (p.alpha - p.b - p.beta * p.m_f) / p.beta;
}

double share_upper_bound(const MarketParams& p) {
    return (p.alpha - p.k_f - p.beta * p.m_f) / p.beta;
}

double share_control(double t, double t_f, double t_c, const MarketParams& p) {
    if (t < 0.0 || t > t_f) throw std::out_of_range("share_control: t outside [0, t_f]");
    const double interior =
        interior_amplitude(p) - interior_decay(p) * std::exp(p.r * (t - t_f - t_c));
    const double q = std::max(interior, share_lower_bound(p));
    const double up = share_upper_bound(p);
    if (q > up * (1.0 + 1e-12) + 1e-12)
        throw ShareBoundError("share control exceeds its admissible upper bound");
    return q;
}

double share_clip_time(double t_f, double t_c, const MarketParams& p) {
    const double a = interior_amplitude(p);
    const double bb = interior_decay(p);
    const double lo = share_lower_bound(p);
    if (a <= lo) return 0.0;  // interior below the bound from the start
    // interior(t) = lo  <=>  t = t_f + t_c + ln((a - lo)/bb) / r
    const double t_star = t_f + t_c + std::log((a - lo) / bb) / p.r;
    return std::clamp(t_star, 0.0, t_f);
}

double share_stock_extracted(double t, double t_f, double t_c, const MarketParams& p) {
    if (t < 0.0 || t > t_f * (1.0 + 1e-12) + 1e-12)
        throw std::out_of_range("share_stock_extracted: t outside [0, t_f]");
    t = std::min(t, t_f);
    const double a = interior_amplitude(p);
    const double bb = interior_decay(p);
    const double clip = share_clip_time(t_f, t_c, p);
    const double t1 = std::min(t, clip);
    // integral of a - bb e^{r(s - t_f - t_c)} over [0, t1]
    double total = a * t1 - bb / p.r * (std::exp(p.r * (t1 - t_f - t_c)) -
                                        std::exp(-p.r * (t_f + t_c)));
    if (t > clip) total += share_lower_bound(p) * (t - clip);
    return total;
}

double share_cum_profit(double t, double t_f, double t_c, const MarketParams& p) {
    if (t < 0.0 || t > t_f * (1.0 + 1e-12) + 1e-12)
        throw std::out_of_range("share_cum_profit: t outside [0, t_f]");
    t = std::min(t, t_f);
    const double a = interior_amplitude(p);
    const double bb = interior_decay(p);
    const double clip = share_clip_time(t_f, t_c, p);
    const double t1 = std::min(t, clip);
    // On the interior stretch the margin is p - k_c = beta (a + bb u) with
    // u = e^{r(s - t_f - t_c)}, so e^{-rs} (p - k_c) q = beta e^{-rs}(a^2 - bb^2 u^2).
    double total = p.beta * (a * a * (1.0 - std::exp(-p.r * t1)) -
                             bb * bb * std::exp(-2.0 * p.r * (t_f + t_c)) *
                                 (std::exp(p.r * t1) - 1.0)) /
                   p.r;
    if (t > clip) {
        // Clipped stretch: the price sits exactly at b, margin b - k_c.
        total += (p.b - p.k_c) * share_lower_bound(p) *
                 (std::exp(-p.r * t1) - std::exp(-p.r * t)) / p.r;
    }
    return total;
}

}  // namespace cfm
