#pragma once

// Exhaustive reference solver for tiny instances (K <= 4). Every pairing
// permutation and every per-pair mode vector is enumerated; each
// configuration is then a plain water-filling problem solved to the exact
// rate target. Used to check the dual solver, not for production runs.

#include <cstddef>
#include <vector>

#include "ospra/types.hpp"

namespace ospra {

enum class OracleScope {
  All,             // every permutation, every mode vector
  DiagonalPairing, // k <-> k only, every mode vector
  DirectOnly,      // k <-> k only, all pairs direct
};

inline constexpr std::size_t kOracleMaxSubcarriers = 4;

/// Minimum power over `gains` (one entry per parallel channel) such that
/// Σ rate(gain_i · x_i) reaches `target`. Returns the per-channel powers.
/// Throws InfeasibleError if target > 0 and every gain is zero.
std::vector<double> water_fill_to_rate(const std::vector<double>& gains, double target);

/// Throws ValidationError if K > 4, InfeasibleError as solve() does.
Allocation oracle_solve(const ChannelInstance& inst, OracleScope scope = OracleScope::All);

}  // namespace ospra
