#pragma once

// Monte Carlo sweep over (K, d) grid points comparing optimized pairing,
// fixed pairing and direct-only transmission.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ospra/channel.hpp"

namespace ospra {

/// Outcome of the three protocols on one channel realization.
struct RealizationOutcome {
  bool feasible = true;
  double p_osp = 0.0;
  double p_fsp = 0.0;
  double p_direct = 0.0;
  std::size_t n_sp = 0;   // relay-aided pairs, optimized pairing
  std::size_t n_fsp = 0;  // relay-aided pairs, fixed pairing
  bool osp_exact = true;
  bool fsp_exact = true;
};

RealizationOutcome evaluate_realization(const ScenarioConfig& cfg, std::uint64_t realization);

struct SweepResult {
  std::size_t num_subcarriers = 0;
  double relay_position = 0.0;
  std::size_t num_runs = 0;  // feasible realizations the averages are taken over
  double avg_p_osp = 0.0;
  double avg_p_fsp = 0.0;
  double avg_p_direct = 0.0;
  double avg_relay_fraction_osp = 0.0;
  double avg_relay_fraction_fsp = 0.0;
  std::size_t fallback_count = 0;    // OSP and FSP solves with exact == false
  std::size_t infeasible_count = 0;  // realizations dropped as infeasible
};

/// Runs `runs` realizations per grid point. Results are identical for any
/// `threads` value: outcomes are merged in realization-index order.
std::vector<SweepResult> run_sweep(const std::vector<ScenarioConfig>& grid, std::size_t runs,
                                   std::size_t threads = 1);

/// One header line plus one row per grid point. With `dbm`, the three power
/// columns are converted to dBm.
void write_sweep_csv(std::ostream& out, const std::vector<SweepResult>& results, bool dbm = false);

}  // namespace ospra
