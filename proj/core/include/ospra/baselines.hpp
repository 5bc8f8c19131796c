#pragma once

// Benchmark protocols: a-priori (diagonal) subcarrier pairing with
// opportunistic relaying, and direct-only transmission.

#include <cstddef>

#include "ospra/dual_solver.hpp"
#include "ospra/types.hpp"

namespace ospra {

/// Lagrangian subproblem restricted to the pairing k <-> k.
DualEvaluation solve_lrp_fixed_pairing(double mu, const ChannelInstance& inst, const PairGainTable& table);

/// Same dual search as solve(), with subcarrier k always paired to k.
Allocation solve_fixed_pairing(const ChannelInstance& inst, const SolverOptions& options = {});

/// Water-filling over the direct links only; both slots of subcarrier k carry
/// [λ − 1/Γ_sd,k]⁺. The reported mu is the dual variable equivalent to λ.
/// Throws InfeasibleError if r_req > 0 and every Γ_sd,k is zero.
Allocation solve_direct_only(const ChannelInstance& inst);

/// Number of relay-aided pairs in an allocation.
std::size_t relay_pair_count(const Allocation& alloc) noexcept;

}  // namespace ospra
