#pragma once

#include <optional>
#include <vector>

#include "cartelfringe/params.hpp"

namespace cfm {

// Aggregate fringe best response to the cartel's current extraction rate.
// The response set is {0}, {m_f}, or empty: a price-taking continuum either
// sits out, runs at full capacity, or has no consistent static response.
enum class ReactionKind { Zero, Full, Empty };

struct FringeReaction {
    ReactionKind kind = ReactionKind::Zero;
    std::optional<double> value;  // 0 or m_f; empty for the Empty band
};

// Joint static reaction function.  Zero when q_c >= (alpha - k_f)/beta (the
// cartel floods the market down to price k_f) or the fringe stock is
// exhausted; Full when q_c <= (alpha - beta*m_f - k_f)/beta and stock
// remains; Empty in between.  Boundary ties resolve toward Zero/Full as the
// inequalities are written — at q_c = (alpha - k_f)/beta the margin is zero,
// so the tie is payoff-irrelevant.
FringeReaction jsrf(double q_c, double s_f, const MarketParams& p);

// Time for the fringe to exhaust its deposit at full capacity: s0_f / m_f.
double fringe_depletion_time(const MarketParams& p);

// Discounted profit of a single negligible fringe firm with capacity
// `capacity_share`, extracting `extraction` against the fixed price path
// `price_path`, both sampled on the common grid `t`.  Piecewise-linear
// interpolation between samples, integrated per segment.  Throws
// std::invalid_argument on mismatched grids or a schedule outside
// [0, capacity_share].
double firm_payoff(const std::vector<double>& t, const std::vector<double>& price_path,
                   const std::vector<double>& extraction, double capacity_share,
                   const MarketParams& p);

}  // namespace cfm
