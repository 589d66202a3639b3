#include "cartelfringe/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cfm {

namespace {

void require_finite(double v, const char* name, bool allow_zero) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be finite");
    if (v < 0.0 || (v == 0.0 && !allow_zero))
        throw std::invalid_argument(std::string(name) + (allow_zero
                                        ? " must be nonnegative"
                                        : " must be strictly positive"));
}

}  // namespace

AssumptionReport validate(const MarketParams& p) {
    require_finite(p.alpha, "alpha", false);
    require_finite(p.beta, "beta", false);
    require_finite(p.b, "b", false);
    require_finite(p.k_c, "k_c", false);
    require_finite(p.k_f, "k_f", false);
    require_finite(p.r, "r", false);
    require_finite(p.s0_c, "s0_c", false);
    // An exhausted fringe deposit is a meaningful degenerate input.
    require_finite(p.s0_f, "s0_f", true);
    require_finite(p.m_f, "m_f", false);
    require_finite(p.m_c, "m_c", false);

    if (!(p.k_c < p.k_f && p.k_f < p.b && p.b < p.alpha))
        throw std::invalid_argument("cost ordering violated: need k_c < k_f < b < alpha");
    if (p.m_c < (p.alpha - p.k_f) / p.beta)
        throw std::invalid_argument("cartel capacity too small: need m_c >= (alpha - k_f)/beta");

    AssumptionReport rep;
    rep.a1_double_cap = {2.0 * p.b - p.k_c <= p.alpha, p.alpha - (2.0 * p.b - p.k_c)};
    rep.a2_double_kf = {2.0 * p.k_f - p.k_c <= p.alpha, p.alpha - (2.0 * p.k_f - p.k_c)};
    rep.a3_share_lb_positive = {p.alpha - p.beta * p.m_f - p.b > 0.0,
                                p.alpha - p.beta * p.m_f - p.b};
    const double lhs = p.s0_f / p.m_f;
    const double denom = p.alpha - p.beta * p.m_f - p.k_f;
    if (denom > 0.0) {
        const double rhs = p.s0_c * p.beta / denom;
        rep.a4_resource_order = {lhs < rhs, rhs - lhs};
    } else {
        // The bound on the fringe horizon is vacuous (negative denominator):
        // the ordering cannot hold.
        rep.a4_resource_order = {false, -std::numeric_limits<double>::infinity()};
    }
    rep.a5_pending = true;
    return rep;
}

Condition evaluate_a5(const MarketParams& p, double t_c) {
    const double e = std::exp(-p.r * t_c);
    const double lhs = p.b * (2.0 - e);
    const double rhs = p.alpha - p.m_f * p.beta + p.k_c * (1.0 - e);
    return {lhs > rhs, lhs - rhs};
}

double price(double q_c, double q_f_total, const MarketParams& p) {
    return std::min(p.alpha - p.beta * (q_c + q_f_total), p.b);
}

}  // namespace cfm
