#include "cartelfringe/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cartelfringe/fringe.hpp"

namespace cfm {

namespace {

struct Point {
    PhaseLabel phase;
    double q_c, q_f, p, s_c, s_f, cum;
};

void push(Trajectory& tr, double t, const Point& pt) {
    tr.t.push_back(t);
    tr.phase.push_back(pt.phase);
    tr.q_c.push_back(pt.q_c);
    tr.q_f_total.push_back(pt.q_f);
    tr.p.push_back(pt.p);
    tr.s_c.push_back(std::max(pt.s_c, 0.0));
    tr.s_f.push_back(std::max(pt.s_f, 0.0));
    tr.cum_profit.push_back(pt.cum);
}

}  // namespace

Trajectory render(const StrategyOutcome& outcome, const MarketParams& p, int n_points) {
    if (n_points < 2) throw std::invalid_argument("render: need n_points >= 2 per phase");
    if (!outcome.feasible)
        throw InfeasibleError("render: outcome is not a feasible equilibrium path (" +
                              (outcome.reason.empty() ? std::string("no value") : outcome.reason) +
                              ")");

    Trajectory tr;
    const double t_f = outcome.depletion_fringe;
    const double t_end = outcome.depletion_cartel;

    // State carried across phases.
    double cum0 = 0.0;

    for (const PhaseSpan& span : outcome.schedule) {
        for (int i = 0; i < n_points; ++i) {
            const double t =
                span.start + (span.end - span.start) * i / double(n_points - 1);
            Point pt{};
            pt.phase = span.phase;
            switch (span.phase) {
                case PhaseLabel::C: {  // deter: flood at price k_f
                    const double q = deter_control(p);
                    pt.q_c = q;
                    pt.q_f = 0.0;
                    pt.p = price(q, 0.0, p);
                    pt.s_c = p.s0_c - q * t;
                    pt.s_f = p.s0_f;
                    pt.cum = (p.k_f - p.k_c) * q * (1.0 - std::exp(-p.r * t)) / p.r;
                    break;
                }
                case PhaseLabel::F: {  // wait: fringe-only
                    pt.q_c = 0.0;
                    pt.q_f = p.m_f;
                    pt.p = price(0.0, p.m_f, p);
                    pt.s_c = p.s0_c;
                    pt.s_f = p.s0_f - p.m_f * t;
                    pt.cum = 0.0;
                    break;
                }
                case PhaseLabel::S: {  // simultaneous extraction
                    const double t_c = *outcome.t_c;
                    const double q = share_control(t, t_f, t_c, p);
                    pt.q_c = q;
                    pt.q_f = p.m_f;
                    pt.p = price(q, p.m_f, p);
                    pt.s_c = p.s0_c - share_stock_extracted(t, t_f, t_c, p);
                    pt.s_f = p.s0_f - p.m_f * t;
                    pt.cum = share_cum_profit(t, t_f, t_c, p);
                    break;
                }
                case PhaseLabel::L: {  // cartel alone at the cap
                    const double q = limit_price_control(p);
                    pt.q_c = q;
                    pt.q_f = 0.0;
                    pt.p = p.b;
                    pt.s_c = q * (t_end - t);  // exactly 0 at depletion
                    pt.s_f = 0.0;
                    pt.cum = cum0 + (p.b - p.k_c) * q *
                                        (std::exp(-p.r * span.start) - std::exp(-p.r * t)) /
                                        p.r;
                    break;
                }
            }
            push(tr, t, pt);
        }
        cum0 = tr.cum_profit.back();
    }

    // The deter path leaves the fringe stock intact: once the cartel is out,
    // the fringe re-enters at full capacity.  Emit the right limit so the
    // price discontinuity is visible in the data.
    if (outcome.class_id == StrategyClass::Deter) {
        Point pt{};
        pt.phase = PhaseLabel::F;
        pt.q_c = 0.0;
        pt.q_f = p.s0_f > 0.0 ? p.m_f : 0.0;
        pt.p = price(0.0, pt.q_f, p);
        pt.s_c = 0.0;
        pt.s_f = p.s0_f;
        pt.cum = cum0;
        push(tr, t_end, pt);
    }

    for (size_t i = 0; i + 1 < tr.t.size(); ++i)
        if (tr.t[i + 1] == tr.t[i] &&
            std::fabs(tr.p[i + 1] - tr.p[i]) > 1e-9 * p.b)
            tr.jumps.push_back({tr.t[i], tr.p[i], tr.p[i + 1]});
    return tr;
}

}  // namespace cfm
