#pragma once

// Minimum-sum-power allocation for two-slot OFDM with optimized subcarrier
// pairing and opportunistic DF relaying.
//
// The indicator variables are relaxed to [0,1] and the products of indicators
// and powers replaced by their perspective form, which makes the problem
// convex. For a fixed rate price μ the Lagrangian separates: every candidate
// pair (k,l) has a closed-form optimal power and a metric (metric_relay /
// metric_direct), and the pairing itself becomes a linear assignment on
// min{A_kl, B_kl}, whose vertices are integral. The achieved rate g(μ) is
// nondecreasing in μ, so μ is found by doubling then bisection until the rate
// lands in [r_req, r_req + epsilon].

#include "ospra/link_formulas.hpp"
#include "ospra/types.hpp"

namespace ospra {

/// Solution of the Lagrangian subproblem at a given μ.
struct DualEvaluation {
  double mu = 0.0;
  Allocation allocation;
  double g = 0.0;           // sum rate of `allocation`
  double lagrangian = 0.0;  // sum_power + mu·(r_req − g)
};

/// Minimizes the Lagrangian at `mu` over all pairings and modes. `table` must
/// come from pair_gain_table(inst).
DualEvaluation solve_lrp(double mu, const ChannelInstance& inst, const PairGainTable& table);

struct SolverOptions {
  // After the epsilon-band search, keep bisecting toward g(μ) = r_req and
  // re-fit the powers of the bracketing pairings/modes to hit r_req exactly,
  // returning the cheaper one. With false, the band-search allocation is
  // returned as is (rate anywhere in [r_req, r_req + epsilon]).
  bool refit_to_target = true;
};

/// Full dual search. Throws InfeasibleError if r_req > 0 and no link can carry
/// any rate. The result has exact == false when the bisection interval
/// collapsed without the rate landing in the epsilon band; without refitting
/// the returned allocation then overshoots the target.
Allocation solve(const ChannelInstance& inst, const SolverOptions& options = {});

/// Minimum-power powers for the pairing and modes already fixed in `alloc`,
/// scaled by a common water level so the sum rate reaches `target`. Returns
/// the re-fitted allocation; throws InfeasibleError if its channels are dead.
Allocation refit_powers(const Allocation& alloc, const ChannelInstance& inst, const PairGainTable& table,
                        double target);

/// Recomputes the sum rate of `alloc` from its powers and the channel gains.
double evaluate_sum_rate(const Allocation& alloc, const ChannelInstance& inst,
                         const PairGainTable& table);

}  // namespace ospra
