#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cartelfringe/params.hpp"
#include "cartelfringe/phases.hpp"

namespace cfm {

enum class StrategyClass { Deter, Share, Wait };

const char* to_string(StrategyClass c);

struct PhaseSpan {
    PhaseLabel phase;
    double start;
    double end;
};

// Everything the solver knows about one strategy class at given parameters.
// `profit` is NaN when the class cannot be valued at all (`has_value` false);
// `feasible` additionally certifies that the closed-form construction is an
// internally consistent equilibrium path (e.g. the share class with the
// depletion ordering reversed is valued but not feasible).
struct StrategyOutcome {
    StrategyClass class_id = StrategyClass::Deter;
    bool has_value = false;
    double profit = 0.0;
    double depletion_cartel = 0.0;
    double depletion_fringe = 0.0;  // 0 for deter (the fringe never enters)
    bool feasible = false;
    std::string reason;  // empty when feasible
    std::vector<PhaseSpan> schedule;
    std::optional<double> t_c;  // share-class horizon, when solved
};

struct StrategyComparison {
    std::array<StrategyOutcome, 3> outcomes;  // Deter, Share, Wait
    std::optional<StrategyClass> best;        // empty only if nothing is valued
    bool tie = false;
    // margins[i][j] = profit_i - profit_j (NaN when either side lacks a value)
    std::array<std::array<double, 3>, 3> margins{};
};

// Deter class: flood at (alpha - k_f)/beta until depletion.
//   pi1 = (1/r)(k_f - k_c)((alpha - k_f)/beta)(1 - e^{-r s0_c beta/(alpha - k_f)})
StrategyOutcome profit_deter(const MarketParams& p);

// Wait class: idle through the fringe phase, then sell at the cap.
//   pi3 = (1/r)(b - k_c)((alpha - b)/beta) e^{-r t_f}(1 - e^{-r s0_c beta/(alpha - b)})
StrategyOutcome profit_wait(const MarketParams& p);

// Share class: adaptive quadrature of the simultaneous-phase integrand
//   e^{-rt}(alpha - beta (q(t) + m_f) - k_c) q(t)  over [0, t_f]
// plus the closed-form limit-price tail
//   I2 = (1/r)(b - k_c)((alpha - b)/beta)(e^{-r t_f} - e^{-r t_c}).
StrategyOutcome profit_share(const MarketParams& p);

// The limit-price tail I2 alone (closed form).
double share_tail_profit(double t_f, double t_c, const MarketParams& p);

// Diagnostic only: the fully expanded algebraic share-profit expression as it
// is usually quoted, which disagrees with the defining integral (its own
// derivation mixes incompatible exponent groupings).  Reported next to the
// quadrature value so the gap is visible; never used for decisions.
double share_profit_expanded_diagnostic(double t_f, double t_c, const MarketParams& p);

// Values all three classes and returns the argmax over the valued outcomes.
// Outcomes that cannot be valued carry a reason and are excluded; exact
// profit ties are flagged rather than arbitrated.
StrategyComparison select_strategy(const MarketParams& p);

}  // namespace cfm
