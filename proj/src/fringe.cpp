#include "cartelfringe/fringe.hpp"

#include <cmath>
#include <stdexcept>

#include "cartelfringe/quadrature.hpp"

namespace cfm {

FringeReaction jsrf(double q_c, double s_f, const MarketParams& p) {
    if (q_c < 0.0 || s_f < 0.0)
        throw std::invalid_argument("jsrf: q_c and s_f must be nonnegative");
    if (s_f == 0.0 || q_c >= (p.alpha - p.k_f) / p.beta)
        return {ReactionKind::Zero, 0.0};
    if (q_c <= (p.alpha - p.beta * p.m_f - p.k_f) / p.beta)
        return {ReactionKind::Full, p.m_f};
    return {ReactionKind::Empty, std::nullopt};
}

double fringe_depletion_time(const MarketParams& p) {
    if (p.m_f <= 0.0)
        throw std::invalid_argument("fringe_depletion_time: m_f must be positive");
    return p.s0_f / p.m_f;
}

double firm_payoff(const std::vector<double>& t, const std::vector<double>& price_path,
                   const std::vector<double>& extraction, double capacity_share,
                   const MarketParams& p) {
    if (t.size() != price_path.size() || t.size() != extraction.size())
        throw std::invalid_argument("firm_payoff: mismatched grids");
    if (t.size() < 2) throw std::invalid_argument("firm_payoff: need at least two samples");
    for (double q : extraction)
        if (q < -1e-12 || q > capacity_share * (1.0 + 1e-12))
            throw std::invalid_argument("firm_payoff: schedule outside [0, capacity]");

    double total = 0.0;
    for (size_t i = 0; i + 1 < t.size(); ++i) {
        const double t0 = t[i], t1 = t[i + 1];
        if (t1 < t0) throw std::invalid_argument("firm_payoff: grid not increasing");
        if (t1 == t0) continue;  // duplicated phase-boundary point
        const double dp = (price_path[i + 1] - price_path[i]) / (t1 - t0);
        const double dq = (extraction[i + 1] - extraction[i]) / (t1 - t0);
        const double p0 = price_path[i], q0 = extraction[i];
        auto integrand = [&](double s) {
            const double dt = s - t0;
            return std::exp(-p.r * s) * (p0 + dp * dt - p.k_f) * (q0 + dq * dt);
        };
        total += integrate(integrand, t0, t1, 1e-12);
    }
    return total;
}

}  // namespace cfm
