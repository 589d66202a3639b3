#include <doctest.h>

#include <cmath>

#include "cartelfringe/fringe.hpp"
#include "cartelfringe/trajectory.hpp"

using namespace cfm;

namespace {

// Shared sanity battery for any rendered trajectory.
void check_invariants(const Trajectory& tr, const StrategyOutcome& o,
                      const MarketParams& p) {
    REQUIRE(tr.t.size() >= 2);
    CHECK(tr.t.front() == 0.0);

    for (size_t i = 0; i + 1 < tr.t.size(); ++i) CHECK(tr.t[i + 1] >= tr.t[i]);

    for (size_t i = 0; i + 1 < tr.t.size(); ++i) {
        CHECK(tr.s_c[i + 1] <= tr.s_c[i] + 1e-9 * p.s0_c);
        CHECK(tr.s_f[i + 1] <= tr.s_f[i] + 1e-9 * std::max(p.s0_f, 1.0));
        CHECK(tr.cum_profit[i + 1] >= tr.cum_profit[i] - 1e-9);
    }
    for (size_t i = 0; i < tr.t.size(); ++i) {
        CHECK(tr.s_c[i] >= 0.0);
        CHECK(tr.s_f[i] >= 0.0);
        // The fringe series is exactly the static reaction to the cartel.
        // At the left limit of a depletion boundary the sampled stock is
        // already 0; probe the reaction with the incoming (positive) stock.
        double sf_probe = tr.s_f[i];
        if (sf_probe == 0.0 &&
            (tr.phase[i] == PhaseLabel::S || tr.phase[i] == PhaseLabel::F) &&
            p.s0_f > 0.0)
            sf_probe = 1e-9;
        const FringeReaction re = jsrf(tr.q_c[i], sf_probe, p);
        REQUIRE(re.kind != ReactionKind::Empty);
        CHECK(tr.q_f_total[i] == doctest::Approx(*re.value).epsilon(1e-12));
        CHECK(tr.p[i] == doctest::Approx(price(tr.q_c[i], tr.q_f_total[i], p)));
    }

    // Cartel stock hits zero at its depletion time.
    double s_c_at_end = -1.0;
    for (size_t i = 0; i < tr.t.size(); ++i)
        if (std::fabs(tr.t[i] - o.depletion_cartel) < 1e-12) s_c_at_end = tr.s_c[i];
    CHECK(s_c_at_end >= 0.0);
    CHECK(s_c_at_end <= 1e-9 * p.s0_c);

    // Mass balance by trapezoid integration, per player.
    double used_c = 0.0, used_f = 0.0;
    for (size_t i = 0; i + 1 < tr.t.size(); ++i) {
        const double dt = tr.t[i + 1] - tr.t[i];
        used_c += 0.5 * (tr.q_c[i] + tr.q_c[i + 1]) * dt;
        used_f += 0.5 * (tr.q_f_total[i] + tr.q_f_total[i + 1]) * dt;
    }
    CHECK(std::fabs(used_c - (p.s0_c - tr.s_c.back())) <= 1e-6 * p.s0_c);
    if (p.s0_f > 0.0)
        CHECK(std::fabs(used_f - (p.s0_f - tr.s_f.back())) <= 1e-6 * p.s0_f);

    // Accumulated profit lands on the strategy value.
    CHECK(std::fabs(tr.cum_profit.back() - o.profit) <= 1e-6 * o.profit);
}

}  // namespace

TEST_CASE("render deter: flat price with one upward jump at depletion") {
    MarketParams p;
    const StrategyOutcome o = profit_deter(p);
    const Trajectory tr = render(o, p, 300);
    check_invariants(tr, o, p);
    REQUIRE(tr.jumps.size() == 1);
    CHECK(tr.jumps[0].t == doctest::Approx(31.973006134969325));
    CHECK(tr.jumps[0].p_left == doctest::Approx(62.5));
    CHECK(tr.jumps[0].p_right == doctest::Approx(102.5));  // min(105.1, b) = b
    for (size_t i = 0; i + 1 < tr.t.size(); ++i) CHECK(tr.p[i] == doctest::Approx(62.5));
}

TEST_CASE("render share: rising price, upward jump to b at the fringe depletion") {
    MarketParams p;
    const StrategyOutcome o = profit_share(p);
    const Trajectory tr = render(o, p, 300);
    check_invariants(tr, o, p);
    CHECK(tr.p.front() == doctest::Approx(66.059).epsilon(1e-4));
    CHECK(tr.p.back() == doctest::Approx(p.b));
    REQUIRE(tr.jumps.size() == 1);
    CHECK(tr.jumps[0].t == doctest::Approx(22.125));
    CHECK(tr.jumps[0].p_right == doctest::Approx(p.b));
    CHECK(tr.jumps[0].p_left < tr.jumps[0].p_right);
    // Strictly increasing price within the simultaneous phase.
    for (size_t i = 0; i + 1 < tr.t.size(); ++i)
        if (tr.phase[i] == PhaseLabel::S && tr.phase[i + 1] == PhaseLabel::S &&
            tr.t[i + 1] > tr.t[i])
            CHECK(tr.p[i + 1] > tr.p[i]);
}

TEST_CASE("render wait: price pinned at b throughout") {
    MarketParams p;
    const StrategyOutcome o = profit_wait(p);
    const Trajectory tr = render(o, p, 300);
    check_invariants(tr, o, p);
    CHECK(tr.jumps.empty());  // alpha - beta*m_f = 105.1 already above b
    for (double v : tr.p) CHECK(v == doctest::Approx(p.b));
}

TEST_CASE("render: argument and feasibility errors") {
    MarketParams p;
    const StrategyOutcome o = profit_deter(p);
    CHECK_THROWS_AS(render(o, p, 1), std::invalid_argument);
    MarketParams q = p;
    q.m_f = 5.0;  // a4 fails: share outcome is valued but not renderable
    const StrategyOutcome bad = profit_share(q);
    CHECK_THROWS_AS(render(bad, q, 100), InfeasibleError);
}
