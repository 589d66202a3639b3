#include "cartelfringe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cartelfringe/fringe.hpp"
#include "cartelfringe/horizon.hpp"
#include "cartelfringe/phases.hpp"
#include "cartelfringe/quadrature.hpp"
#include "cartelfringe/trajectory.hpp"

namespace cfm {

namespace {

OracleReport make_report(std::string check, double closed, double oracle, double tol,
                         double scale) {
    OracleReport r;
    r.check = std::move(check);
    r.closed_form = closed;
    r.oracle_value = oracle;
    r.rel_gap = (oracle - closed) / scale;
    r.tolerance = tol;
    r.pass = std::fabs(r.rel_gap) <= tol;
    return r;
}

// Discounted weight of a time interval: integral of e^{-rt} over [t0, t1].
double disc_weight(double r, double t0, double t1) {
    return (std::exp(-r * t0) - std::exp(-r * t1)) / r;
}

// Discounted limit-price profit from selling stock s starting at time t0.
double tail_profit(const MarketParams& p, double t0, double s) {
    if (s <= 0.0) return 0.0;
    const double q = (p.alpha - p.b) / p.beta;
    const double dur = s / q;
    return (p.b - p.k_c) * q * std::exp(-p.r * t0) * (1.0 - std::exp(-p.r * dur)) / p.r;
}

// Maximizes a concave function on [lo, hi] by golden-section search.
template <class F>
double golden_max(F&& f, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 90 && b - a > 1e-14 * std::max(1.0, std::fabs(b)); ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

OracleReport verify_share_optimality(const MarketParams& p, int n_steps, int n_starts,
                                     std::uint64_t seed) {
    const AssumptionReport rep = validate(p);
    if (!rep.a1_double_cap.holds || !rep.a4_resource_order.holds ||
        !rep.a3_share_lb_positive.holds)
        throw InfeasibleError("verify_share_optimality: share regime infeasible");
    const HorizonSolution sol = solve_t_c(p);
    if (!evaluate_a5(p, sol.t_c).holds)
        throw InfeasibleError("verify_share_optimality: interior-share condition a5 fails");

    const double t_f = fringe_depletion_time(p);
    const double lo = share_lower_bound(p);
    const double hi = share_upper_bound(p);
    const double margin0 = p.alpha - p.beta * p.m_f - p.k_c;  // price margin at q = 0
    const double dt = t_f / n_steps;

    const double closed = profit_share(p).profit;

    // Payoff of a piecewise-constant schedule: per-step static profit with the
    // exact discount weight, plus the limit-price tail on the leftover stock.
    std::vector<double> w(n_steps);
    for (int i = 0; i < n_steps; ++i) w[i] = disc_weight(p.r, i * dt, (i + 1) * dt);

    auto sweep_ascent = [&](std::vector<double>& q) {
        double used = 0.0;
        double static_part = 0.0;
        for (int i = 0; i < n_steps; ++i) {
            used += q[i] * dt;
            static_part += w[i] * q[i] * (margin0 - p.beta * q[i]);
        }
        double value = static_part + tail_profit(p, t_f, p.s0_c - used);
        for (int pass = 0; pass < 60; ++pass) {
            const double before = value;
            for (int i = 0; i < n_steps; ++i) {
                const double used_other = used - q[i] * dt;
                auto g = [&](double qi) {
                    return w[i] * qi * (margin0 - p.beta * qi) +
                           tail_profit(p, t_f, p.s0_c - used_other - qi * dt);
                };
                const double qi = golden_max(g, lo, hi);
                used = used_other + qi * dt;
                static_part += w[i] * (qi * (margin0 - p.beta * qi) -
                                       q[i] * (margin0 - p.beta * q[i]));
                q[i] = qi;
            }
            value = static_part + tail_profit(p, t_f, p.s0_c - used);
            if (value - before <= 1e-12 * std::max(1.0, std::fabs(value))) break;
        }
        return value;
    };

    double best = -std::numeric_limits<double>::infinity();
    {
        std::vector<double> q(n_steps);
        for (int i = 0; i < n_steps; ++i)
            q[i] = share_control((i + 0.5) * dt, t_f, sol.t_c, p);
        best = std::max(best, sweep_ascent(q));
    }
    for (int s = 0; s < n_starts; ++s) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(s) + 1);
        std::uniform_real_distribution<double> u(lo, hi);
        std::vector<double> q(n_steps);
        for (double& qi : q) qi = u(rng);
        best = std::max(best, sweep_ascent(q));
    }

    OracleReport r = make_report("share_optimality", closed, best, 1e-4,
                                 std::max(1.0, std::fabs(closed)));
    // One-sided verdict: the discretized schedules are a subset of the
    // admissible controls, so the oracle may fall short but must not win.
    r.pass = best - closed <= 1e-4 * std::max(1.0, std::fabs(closed));
    return r;
}

OracleReport verify_fringe_nash(const StrategyOutcome& outcome, const MarketParams& p,
                                std::uint64_t seed, int n_schedules) {
    const Trajectory tr = render(outcome, p, 400);
    const double cap = 1.0;  // capacity of the probe firm (measure zero)

    std::vector<double> baseline(tr.t.size());
    for (size_t i = 0; i < tr.t.size(); ++i)
        baseline[i] = tr.p[i] > p.k_f ? cap : 0.0;
    const double base_value = firm_payoff(tr.t, tr.p, baseline, cap, p);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, cap);
    double best_dev = -std::numeric_limits<double>::infinity();
    std::vector<double> sched(tr.t.size());
    for (int k = 0; k < n_schedules; ++k) {
        for (double& q : sched) q = u(rng);
        best_dev = std::max(best_dev, firm_payoff(tr.t, tr.p, sched, cap, p));
    }

    const double scale = std::max(1.0, std::fabs(base_value));
    OracleReport r = make_report("fringe_nash_" + std::string(to_string(outcome.class_id)),
                                 base_value, best_dev, 1e-9, scale);
    r.pass = best_dev - base_value <= 1e-9 * scale;
    return r;
}

std::vector<OracleReport> run_all_checks(const MarketParams& p, std::uint64_t seed) {
    std::vector<OracleReport> out;
    const AssumptionReport rep = validate(p);

    const StrategyOutcome deter = profit_deter(p);
    if (deter.has_value) {
        const double q = deter_control(p);
        auto integrand = [&](double t) {
            return std::exp(-p.r * t) * (p.k_f - p.k_c) * q;
        };
        const double oracle = integrate(integrand, 0.0, deter.depletion_cartel, 1e-12);
        out.push_back(make_report("pi1_quadrature", deter.profit, oracle, 1e-10,
                                  std::max(1.0, std::fabs(deter.profit))));
    }

    const StrategyOutcome wait = profit_wait(p);
    if (wait.has_value) {
        const double q = limit_price_control(p);
        auto integrand = [&](double t) {
            return std::exp(-p.r * t) * (p.b - p.k_c) * q;
        };
        const double oracle =
            integrate(integrand, wait.depletion_fringe, wait.depletion_cartel, 1e-12);
        out.push_back(make_report("pi3_quadrature", wait.profit, oracle, 1e-10,
                                  std::max(1.0, std::fabs(wait.profit))));
    }

    const StrategyOutcome share = profit_share(p);
    if (share.has_value && share.feasible) {
        const double t_f = share.depletion_fringe;
        const double t_c = *share.t_c;

        {  // limit-price tail closed form vs quadrature
            const double q = limit_price_control(p);
            auto integrand = [&](double t) {
                return std::exp(-p.r * t) * (p.b - p.k_c) * q;
            };
            const double closed = share_tail_profit(t_f, t_c, p);
            const double oracle = integrate(integrand, t_f, t_c, 1e-12);
            out.push_back(make_report("share_tail_quadrature", closed, oracle, 1e-10,
                                      std::max(1.0, std::fabs(closed))));
        }
        {  // simultaneous-phase integral: adaptive quadrature vs Riemann sum
            auto rate = [&](double t) {
                const double q = share_control(t, t_f, t_c, p);
                return std::exp(-p.r * t) * (p.alpha - p.beta * (q + p.m_f) - p.k_c) * q;
            };
            const double head = share.profit - share_tail_profit(t_f, t_c, p);
            const int n = 1000000;
            double riemann = 0.0;
            const double dt = t_f / n;
            for (int i = 0; i < n; ++i) riemann += rate((i + 0.5) * dt);
            riemann *= dt;
            out.push_back(make_report("share_head_riemann", head, riemann, 1e-6,
                                      std::max(1.0, std::fabs(head))));
        }
        {  // stock conservation, antiderivative route and quadrature route
            const double tail_stock = (p.alpha - p.b) / p.beta * (t_c - t_f);
            const double anti = share_stock_extracted(t_f, t_f, t_c, p) + tail_stock;
            out.push_back(
                make_report("stock_conservation_antiderivative", p.s0_c, anti, 1e-9, p.s0_c));
            auto q_of_t = [&](double t) { return share_control(t, t_f, t_c, p); };
            const double clip = share_clip_time(t_f, t_c, p);
            const double quad = integrate(q_of_t, 0.0, clip, 1e-12) +
                                integrate(q_of_t, clip, t_f, 1e-12) + tail_stock;
            out.push_back(
                make_report("stock_conservation_quadrature", p.s0_c, quad, 1e-9, p.s0_c));
        }
        {  // costate consistency: the control rebuilt from gamma_c matches
            const double gamma = costate_share(t_f, t_c, p).gamma_c;
            double worst = 0.0;
            for (int i = 0; i <= 32; ++i) {
                const double t = t_f * i / 32.0;
                const double rebuilt =
                    std::max((p.alpha - p.k_c - p.beta * p.m_f) / (2.0 * p.beta) -
                                 gamma * std::exp(p.r * t) / (2.0 * p.beta),
                             share_lower_bound(p));
                const double direct = share_control(t, t_f, t_c, p);
                worst = std::max(worst,
                                 std::fabs(rebuilt - direct) / std::max(1.0, std::fabs(direct)));
            }
            OracleReport r = make_report("costate_consistency", 0.0, worst, 1e-12, 1.0);
            r.pass = worst <= 1e-12;
            out.push_back(r);
        }
        if (evaluate_a5(p, t_c).holds)
            out.push_back(verify_share_optimality(p, 2000, 10, seed));
    }

    if (deter.feasible) out.push_back(verify_fringe_nash(deter, p, seed ^ 0x9e3779b97f4a7c15ull));
    if (share.feasible) out.push_back(verify_fringe_nash(share, p, seed ^ 0x3c6ef372fe94f82aull));
    if (wait.feasible) out.push_back(verify_fringe_nash(wait, p, seed ^ 0xdaa66d2b79f9dc25ull));

    (void)rep;
    return out;
}

}  // namespace cfm
