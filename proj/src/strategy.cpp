#include "cartelfringe/strategy.hpp"

#include <cmath>
#include <limits>

#include "cartelfringe/fringe.hpp"
#include "cartelfringe/horizon.hpp"
#include "cartelfringe/quadrature.hpp"

namespace cfm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

StrategyOutcome unvalued(StrategyClass c, std::string reason) {
    StrategyOutcome o;
    o.class_id = c;
    o.has_value = false;
    o.profit = kNaN;
    o.feasible = false;
    o.reason = std::move(reason);
    return o;
}

}  // namespace

const char* to_string(StrategyClass c) {
    switch (c) {
        case StrategyClass::Deter: return "deter";
        case StrategyClass::Share: return "share";
        case StrategyClass::Wait: return "wait";
    }
    return "?";
}

StrategyOutcome profit_deter(const MarketParams& p) {
    if (2.0 * p.k_f - p.k_c > p.alpha)
        return unvalued(StrategyClass::Deter,
                        "a2 fails: 2 k_f - k_c > alpha, flooding at price k_f is not optimal");
    StrategyOutcome o;
    o.class_id = StrategyClass::Deter;
    o.has_value = true;
    o.feasible = true;
    const double q = deter_control(p);
    o.depletion_cartel = deter_depletion(p);
    o.depletion_fringe = 0.0;
    o.profit = (p.k_f - p.k_c) * q * (1.0 - std::exp(-p.r * o.depletion_cartel)) / p.r;
    o.schedule = {{PhaseLabel::C, 0.0, o.depletion_cartel}};
    return o;
}

StrategyOutcome profit_wait(const MarketParams& p) {
    if (2.0 * p.b - p.k_c > p.alpha)
        return unvalued(StrategyClass::Wait, "a1 fails: no pure limit-price tail");
    StrategyOutcome o;
    o.class_id = StrategyClass::Wait;
    o.has_value = true;
    o.feasible = true;
    const double t_f = fringe_depletion_time(p);
    const double q = limit_price_control(p);
    o.depletion_fringe = t_f;
    o.depletion_cartel = wait_depletion(p);
    o.profit = (p.b - p.k_c) * q * std::exp(-p.r * t_f) *
               (1.0 - std::exp(-p.r * (o.depletion_cartel - t_f))) / p.r;
    if (t_f > 0.0) o.schedule.push_back({PhaseLabel::F, 0.0, t_f});
    o.schedule.push_back({PhaseLabel::L, t_f, o.depletion_cartel});
    return o;
}

double share_tail_profit(double t_f, double t_c, const MarketParams& p) {
    return (p.b - p.k_c) * (p.alpha - p.b) / p.beta *
           (std::exp(-p.r * t_f) - std::exp(-p.r * t_c)) / p.r;
}

StrategyOutcome profit_share(const MarketParams& p) {
    if (2.0 * p.b - p.k_c > p.alpha)
        return unvalued(StrategyClass::Share, "a1 fails: no limit-price tail");
    if (!(p.alpha - p.beta * p.m_f - p.b > 0.0))
        return unvalued(StrategyClass::Share,
                        "a3 fails: fringe capacity pushes the capped price to b, "
                        "no interior simultaneous phase");
    const double t_f = fringe_depletion_time(p);
    if (t_f <= 0.0)
        return unvalued(StrategyClass::Share,
                        "degenerate: empty fringe stock (t_f = 0), no simultaneous phase");

    StrategyOutcome o;
    o.class_id = StrategyClass::Share;
    o.depletion_fringe = t_f;

    const double a4_denom = p.alpha - p.beta * p.m_f - p.k_f;
    const bool a4_ok = a4_denom > 0.0 && t_f < p.s0_c * p.beta / a4_denom;
    HorizonSolution sol;
    try {
        sol = a4_ok ? solve_t_c(p) : solve_t_c_relaxed(p);
    } catch (const InfeasibleError& e) {
        return unvalued(StrategyClass::Share, e.what());
    }
    o.t_c = sol.t_c;
    o.depletion_cartel = sol.t_c;

    double head = 0.0;
    try {
        auto integrand = [&](double t) {
            const double q = share_control(t, t_f, sol.t_c, p);
            return std::exp(-p.r * t) * (p.alpha - p.beta * (q + p.m_f) - p.k_c) * q;
        };
        // The control has a kink where the lower-bound clip engages; split
        // the quadrature there so each piece is smooth.
        const double clip = share_clip_time(t_f, sol.t_c, p);
        head = integrate(integrand, 0.0, clip, 1e-12) +
               integrate(integrand, clip, t_f, 1e-12);
    } catch (const ShareBoundError& e) {
        return unvalued(StrategyClass::Share, e.what());
    }
    o.has_value = true;
    o.profit = head + share_tail_profit(t_f, sol.t_c, p);
    if (a4_ok) {
        o.feasible = true;
        o.schedule = {{PhaseLabel::S, 0.0, t_f}, {PhaseLabel::L, t_f, sol.t_c}};
    } else {
        o.feasible = false;
        o.reason = "a4 fails: cartel would deplete before the fringe; "
                   "valued for comparison only";
    }
    return o;
}

double share_profit_expanded_diagnostic(double t_f, double t_c, const MarketParams& p) {
    const double a = p.alpha, bb = p.b, kc = p.k_c, mfb = p.m_f * p.beta;
    const double be = p.beta, r = p.r;
    const double t1 = (a - kc - mfb) / (2.0 * be * r) * (a - kc + mfb) / 2.0 *
                      (1.0 - std::exp(-r * t_f));
    const double t2 = (bb - kc) / 2.0 * (a - bb - mfb) / (2.0 * be) *
                      std::exp(-r * (t_f + t_c)) * t_f;
    const double t3 = -(a - kc + mfb) / 2.0 * (bb - kc) / (2.0 * be) *
                      std::exp(-r * (t_f + t_c)) * t_f;
    const double t4 = -(1.0 / (r * be)) * (bb - kc) * (bb - kc) / 4.0 *
                      std::exp(-r * (t_f + 2.0 * t_c)) * (1.0 - std::exp(-r * t_f));
    const double t5 = share_tail_profit(t_f, t_c, p);
    return t1 + t2 + t3 + t4 + t5;
}

StrategyComparison select_strategy(const MarketParams& p) {
    StrategyComparison cmp;
    cmp.outcomes = {profit_deter(p), profit_share(p), profit_wait(p)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            cmp.margins[i][j] = (cmp.outcomes[i].has_value && cmp.outcomes[j].has_value)
                                    ? cmp.outcomes[i].profit - cmp.outcomes[j].profit
                                    : kNaN;
    int best = -1;
    for (int i = 0; i < 3; ++i) {
        if (!cmp.outcomes[i].has_value) continue;
        if (best < 0 || cmp.outcomes[i].profit > cmp.outcomes[best].profit) best = i;
    }
    if (best >= 0) {
        cmp.best = cmp.outcomes[best].class_id;
        for (int i = 0; i < 3; ++i)
            if (i != best && cmp.outcomes[i].has_value &&
                cmp.outcomes[i].profit == cmp.outcomes[best].profit)
                cmp.tie = true;
    }
    return cmp;
}

}  // namespace cfm
