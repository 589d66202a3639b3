#include <doctest.h>

#include <cmath>

#include "cartelfringe/sweep.hpp"

using namespace cfm;

TEST_CASE("sweep_1d over m_f: share best everywhere, pi1 exactly constant") {
    MarketParams base;
    const SweepGrid grid = sweep_1d({"m_f", 0.5, 28.5, 100}, base);
    REQUIRE(grid.cells.size() == 100);
    double pi1_first = grid.cells.front().pi1;
    double prev_pi3 = -1.0;
    for (const SweepCell& c : grid.cells) {
        REQUIRE(c.valid);
        CHECK(c.best == "share");
        CHECK(c.pi1 == pi1_first);  // bitwise: the deter class ignores m_f
        CHECK(c.pi3 > prev_pi3);    // later fringe exit is worth more waiting
        prev_pi3 = c.pi3;
        CHECK(std::isfinite(c.pi2));
    }
}

TEST_CASE("sweep_1d over m_f: the hard cap is flagged, not skipped") {
    MarketParams base;
    const SweepGrid grid = sweep_1d({"m_f", 28.0, 29.0, 5}, base);
    REQUIRE(grid.cells.size() == 5);
    CHECK(grid.cells.front().valid);  // 28.0 < 28.605
    CHECK_FALSE(grid.cells.back().valid);
    CHECK(grid.cells.back().reason.find("hard cap") != std::string::npos);
    CHECK(std::isnan(grid.cells.back().pi2));
}

TEST_CASE("sweep_1d over s0_f: share stays best; pi2 variation is reported") {
    MarketParams base;
    const SweepGrid grid = sweep_1d({"s0_f", 50.0, 619.5, 40}, base);
    double lo = 1e300, hi = -1e300;
    for (const SweepCell& c : grid.cells) {
        REQUIRE(c.valid);
        CHECK(c.best == "share");
        lo = std::min(lo, c.pi2);
        hi = std::max(hi, c.pi2);
    }
    // The share value is NOT insensitive to s0_f under the integral-based
    // valuation: the variation over this range is large and real.
    const double variation = (hi - lo) / hi;
    MESSAGE("pi2 variation over the s0_f sweep: ", variation);
    CHECK(variation > 0.05);
    CHECK(variation < 0.60);
}

TEST_CASE("sweep_1d: axis validation") {
    MarketParams base;
    CHECK_THROWS_AS(sweep_1d({"m_f", 1.0, 2.0, 1}, base), std::invalid_argument);
    CHECK_THROWS_AS(sweep_1d({"m_f", 2.0, 1.0, 5}, base), std::invalid_argument);
    CHECK_THROWS_AS(sweep_1d({"nope", 1.0, 2.0, 5}, base), std::invalid_argument);
}

TEST_CASE("classify_regions: domain exclusions and benchmark cell") {
    MarketParams base;
    const SweepGrid grid = classify_regions({"k_f", 0.0, 100.0, 50}, {"k_c", 0.0, 60.0, 50}, base);
    REQUIRE(grid.cells.size() == 2500);

    int invalid = 0;
    for (const SweepCell& c : grid.cells) {
        REQUIRE(c.coords.size() == 2);
        if (c.coords[1] >= c.coords[0]) {
            CHECK_FALSE(c.valid);
            ++invalid;
        }
    }
    CHECK(invalid > 0);

    // Cell nearest the benchmark (k_f ~ 62.5, k_c ~ 18) picks share.
    double best_d = 1e300;
    const SweepCell* nearest = nullptr;
    for (const SweepCell& c : grid.cells) {
        const double d = std::hypot(c.coords[0] - 62.5, c.coords[1] - 18.0);
        if (d < best_d) {
            best_d = d;
            nearest = &c;
        }
    }
    REQUIRE(nearest != nullptr);
    CHECK(nearest->valid);
    CHECK(nearest->best == "share");

    // High fringe costs: deter dominates share everywhere it is valued.
    for (const SweepCell& c : grid.cells) {
        if (!c.valid || c.coords[0] < 96.2) continue;
        if (std::isfinite(c.pi2)) CHECK(c.pi1 > c.pi2);
        else CHECK(c.best != "share");
    }
}

TEST_CASE("trace_boundary: deter/share crossing exists at moderate k_f") {
    MarketParams base;
    const RegionBoundary boundary =
        trace_boundary(StrategyClass::Deter, StrategyClass::Share, {"k_f", 68.0, 74.0, 4}, base);
    CHECK(boundary.name == "pi1=pi2");
    REQUIRE(!boundary.points.empty());
    for (const auto& [kf, kc] : boundary.points) {
        // Re-evaluate independently: the crossing really is a near-tie.
        MarketParams p = base;
        p.k_f = kf;
        p.k_c = kc;
        const StrategyComparison cmp = select_strategy(p);
        const double pi1 = cmp.outcomes[0].profit;
        const double pi2 = cmp.outcomes[1].profit;
        CHECK(std::fabs(pi1 - pi2) <= 1e-4 * std::max(pi1, pi2));
    }
}

TEST_CASE("trace_boundary: high-k_f crossings sit above the classify window") {
    MarketParams base;
    // The deter/share boundary persists at high k_f, but its k_c coordinate
    // has drifted above 60 — consistent with deter dominating share across
    // the whole classified k_c in (0, 60) window up there.
    const RegionBoundary high =
        trace_boundary(StrategyClass::Deter, StrategyClass::Share, {"k_f", 95.5, 97.0, 3}, base);
    REQUIRE(high.points.size() == 3);
    for (const auto& [kf, kc] : high.points) {
        CHECK(kc > 60.0);
        MarketParams p = base;
        p.k_f = kf;
        p.k_c = kc;
        const StrategyComparison cmp = select_strategy(p);
        const double pi1 = cmp.outcomes[0].profit;
        const double pi2 = cmp.outcomes[1].profit;
        CHECK(std::fabs(pi1 - pi2) <= 1e-4 * std::max(pi1, pi2));
    }
}

TEST_CASE("trace_boundary: absent crossings come back empty, not as errors") {
    MarketParams base;
    // Share dominates wait outright at moderate fringe costs.
    const RegionBoundary sw =
        trace_boundary(StrategyClass::Share, StrategyClass::Wait, {"k_f", 63.0, 80.0, 4}, base);
    CHECK(sw.points.empty());
}
