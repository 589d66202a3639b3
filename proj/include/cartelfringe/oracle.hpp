#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartelfringe/params.hpp"
#include "cartelfringe/strategy.hpp"

namespace cfm {

// One brute-force verification result: a closed-form quantity, the
// independently computed oracle value, and the verdict at the stated
// tolerance.
struct OracleReport {
    std::string check;
    double closed_form = 0.0;
    double oracle_value = 0.0;
    double rel_gap = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Confirms the closed-form share-phase control is (numerically) optimal:
// discretizes [0, t_f] into n_steps piecewise-constant controls constrained
// to the admissible interval, consumes the leftover stock in the limit-price
// tail, and runs projected coordinate ascent from the closed-form control
// plus n_starts seeded random starts.  Passes when the closed-form profit is
// within 1e-4 relative of the best profit discovered.  Requires a1, a4, a5;
// throws InfeasibleError otherwise.
OracleReport verify_share_optimality(const MarketParams& p, int n_steps = 2000,
                                     int n_starts = 10, std::uint64_t seed = 0);

// Confirms no measure-zero fringe firm can profit by deviating from the
// static best response (full capacity when p > k_f, idle when p < k_f) along
// the rendered trajectory of `outcome`, against n_schedules random feasible
// schedules with the price path held fixed.  Tolerance 1e-9 * scale.
OracleReport verify_fringe_nash(const StrategyOutcome& outcome, const MarketParams& p,
                                std::uint64_t seed = 0, int n_schedules = 100);

// The full battery driven by the CLI: closed-form-vs-quadrature checks for
// every profit formula, a million-step Riemann cross-check of the share
// integral, stock conservation through the horizon equation, costate
// consistency, share optimality, and the fringe Nash check for each feasible
// strategy class.  Identical seeds produce identical reports.
std::vector<OracleReport> run_all_checks(const MarketParams& p, std::uint64_t seed);

}  // namespace cfm
