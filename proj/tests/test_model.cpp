#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cartelfringe/config.hpp"
#include "cartelfringe/params.hpp"

using namespace cfm;

TEST_CASE("validate: benchmark conditions and slacks") {
    MarketParams p;  // benchmark defaults
    const AssumptionReport rep = validate(p);
    CHECK(rep.a1_double_cap.holds);
    CHECK(rep.a1_double_cap.slack == doctest::Approx(38.5).epsilon(1e-12));
    CHECK(rep.a2_double_kf.holds);
    CHECK(rep.a2_double_kf.slack == doctest::Approx(118.5).epsilon(1e-12));
    CHECK(rep.a3_share_lb_positive.holds);
    CHECK(rep.a3_share_lb_positive.slack == doctest::Approx(2.6).epsilon(1e-9));
    CHECK(rep.a4_resource_order.holds);
    // t_f = 22.125 against the ordering bound s0_c*beta/(alpha-beta*m_f-k_f)
    const double bound = p.s0_c * p.beta / (p.alpha - p.beta * p.m_f - p.k_f);
    CHECK(bound == doctest::Approx(122.33802816901408).epsilon(1e-12));
    CHECK(rep.a4_resource_order.slack == doctest::Approx(bound - 22.125).epsilon(1e-12));
    CHECK(rep.a5_pending);
    CHECK(rep.all_hold());
}

TEST_CASE("validate: hard errors") {
    MarketParams p;
    SUBCASE("ordering violated: b = alpha") {
        p.b = p.alpha;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
    }
    SUBCASE("non-positive field") {
        p.beta = 0.0;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
    }
    SUBCASE("non-finite field") {
        p.alpha = std::nan("");
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
    }
    SUBCASE("cartel capacity below the flooding control") {
        p.m_c = 10.0;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
    }
    SUBCASE("empty fringe stock is allowed") {
        p.s0_f = 0.0;
        CHECK_NOTHROW(validate(p));
    }
}

TEST_CASE("validate: m_f = 30 breaks a3") {
    MarketParams p;
    p.m_f = 30.0;
    const AssumptionReport rep = validate(p);
    CHECK_FALSE(rep.a3_share_lb_positive.holds);
    CHECK(p.alpha - p.beta * p.m_f == doctest::Approx(96.5));
}

TEST_CASE("validate is idempotent") {
    MarketParams p;
    const AssumptionReport r1 = validate(p);
    const AssumptionReport r2 = validate(p);
    CHECK(r1.a1_double_cap.slack == r2.a1_double_cap.slack);
    CHECK(r1.a4_resource_order.slack == r2.a4_resource_order.slack);
}

TEST_CASE("price: examples and properties") {
    MarketParams p;
    CHECK(price(0.0, 0.0, p) == p.b);  // zero output, capped at b
    CHECK(price(0.0, 28.0, p) == doctest::Approx(102.5));
    CHECK(price((p.alpha - p.k_f) / p.beta, 0.0, p) == doctest::Approx(62.5));
    // Non-increasing in each argument, never above b.
    double prev = price(0.0, 0.0, p);
    for (double q = 0.0; q <= 60.0; q += 0.5) {
        const double v = price(q, 3.0, p);
        CHECK(v <= prev + 1e-12);
        CHECK(v <= p.b);
        prev = v;
    }
}

TEST_CASE("evaluate_a5 at the benchmark horizon") {
    MarketParams p;
    const Condition c = evaluate_a5(p, 57.785405657887422);
    CHECK(c.holds);
    CHECK(c.slack > 0.0);
}

TEST_CASE("config: defaults, overrides, comments") {
    std::istringstream in("# comment\n\nm_f = 28.5\nr=0.2\n");
    const MarketParams p = parse_config(in);
    CHECK(p.m_f == 28.5);
    CHECK(p.r == 0.2);
    CHECK(p.alpha == 225.5);  // untouched keys keep benchmark defaults
    CHECK(p.m_c == 50.0);
}

TEST_CASE("config: errors carry line numbers") {
    SUBCASE("missing equals") {
        std::istringstream in("alpha 225.5\n");
        CHECK_THROWS_WITH_AS(parse_config(in),
                             "line 1: expected `key = value`, got \"alpha 225.5\"",
                             ConfigError);
    }
    SUBCASE("unknown key") {
        std::istringstream in("alpha = 1\nbogus = 2\n");
        try {
            parse_config(in);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.line == 2);
        }
    }
    SUBCASE("duplicate key") {
        std::istringstream in("r = 0.1\nr = 0.2\n");
        CHECK_THROWS_AS(parse_config(in), ConfigError);
    }
    SUBCASE("bad number") {
        std::istringstream in("alpha = fast\n");
        CHECK_THROWS_AS(parse_config(in), ConfigError);
    }
    SUBCASE("trailing characters") {
        std::istringstream in("alpha = 225.5x\n");
        CHECK_THROWS_AS(parse_config(in), ConfigError);
    }
}
