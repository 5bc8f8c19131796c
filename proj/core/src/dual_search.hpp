#pragma once

// Internal helpers shared by the optimized-pairing solver and the
// fixed-pairing baseline.

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

#include "ospra/dual_solver.hpp"
#include "ospra/link_formulas.hpp"
#include "ospra/types.hpp"

namespace ospra::detail {

inline constexpr double kModeTieTolerance = 1e-12;
inline constexpr double kMuCeiling = 1152921504606846976.0;  // 2^60
inline constexpr int kMaxBisections = 200;
inline constexpr double kCollapseRatio = 1e-13;

/// Relay mode wins only when its metric is strictly smaller beyond the tie band.
inline TransmissionMode pick_mode(double metric_relay_value, double metric_direct_value) {
  return metric_relay_value < metric_direct_value - kModeTieTolerance ? TransmissionMode::RelayAided
                                                                      : TransmissionMode::Direct;
}

/// Powers and rate of pair (k,l) at the Lagrangian-optimal level for `mu`.
inline PairDecision make_decision(double mu, const ChannelInstance& inst, const PairGainTable& table,
                                  std::size_t k, std::size_t l, TransmissionMode mode) {
  PairDecision d;
  d.k = k;
  d.l = l;
  d.mode = mode;
  if (mode == TransmissionMode::RelayAided) {
    const double gain = table(k, l);
    d.total_power = lambda_power(mu, gain);
    const PowerSplit split = power_split(d.total_power, inst.gamma_sr[k], inst.gamma_sd[k], inst.gamma_rd[l]);
    d.slot1_power = split.slot1_power;
    d.slot2_relay_power = split.relay_power;
    d.rate = rate(gain * d.total_power);
  } else {
    d.slot1_power = lambda_power(mu, inst.gamma_sd[k]);
    d.slot2_source_power = lambda_power(mu, inst.gamma_sd[l]);
    d.total_power = d.slot1_power + d.slot2_source_power;
    d.rate = rate(inst.gamma_sd[k] * d.slot1_power) + rate(inst.gamma_sd[l] * d.slot2_source_power);
  }
  return d;
}

inline DualEvaluation finish_evaluation(double mu, double r_req, Allocation alloc) {
  recompute_totals(alloc);
  alloc.mu = mu;
  DualEvaluation ev;
  ev.mu = mu;
  ev.g = alloc.sum_rate;
  ev.lagrangian = alloc.sum_power + mu * (r_req - ev.g);
  ev.allocation = std::move(alloc);
  return ev;
}

inline Allocation zero_allocation(std::size_t k) {
  Allocation alloc;
  alloc.decisions.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    alloc.decisions[i].k = i;
    alloc.decisions[i].l = i;
  }
  return alloc;
}

inline bool has_positive_path(const ChannelInstance& inst, const PairGainTable& table) {
  for (std::size_t k = 0; k < inst.size(); ++k) {
    if (inst.gamma_sd[k] > 0.0) return true;
    for (std::size_t l = 0; l < inst.size(); ++l) {
      if (table(k, l) > 0.0) return true;
    }
  }
  return false;
}

/// μ doubling followed by bisection until g(μ) lands in [r_req, r_req + ε].
/// `lrp(mu)` must return the Lagrangian minimizer at `mu`. With refitting,
/// the bracket is then narrowed toward g(μ) = r_req and the cheaper of the
/// two bracketing indicator sets, re-fitted to r_req, is returned.
template <class Lrp>
Allocation dual_search(const ChannelInstance& inst, const PairGainTable& table, const SolverOptions& options,
                       Lrp&& lrp) {
  inst.validate();
  if (inst.r_req == 0.0) return zero_allocation(inst.size());
  if (!has_positive_path(inst, table)) {
    throw InfeasibleError("every channel gain is zero; no positive rate is reachable");
  }

  const double target = inst.r_req;
  const double upper = inst.r_req + inst.epsilon;
  auto in_band = [&](double g) { return g >= target && g <= upper; };

  double mu_lo = 0.0;
  double mu_hi = 1.0;
  std::optional<DualEvaluation> lo_eval;
  DualEvaluation hi_eval = lrp(mu_hi);
  while (hi_eval.g <= target) {
    mu_hi *= 2.0;
    if (mu_hi > kMuCeiling) {
      throw InfeasibleError("rate target unreachable: dual variable exceeded 2^60");
    }
    lo_eval = std::move(hi_eval);
    mu_lo = mu_hi / 2.0;
    hi_eval = lrp(mu_hi);
  }
  // the bisection restarts from μ_min = 0
  mu_lo = 0.0;
  lo_eval.reset();

  bool landed = false;
  for (int iter = 0; iter < kMaxBisections; ++iter) {
    if (mu_hi - mu_lo < kCollapseRatio * mu_hi) break;
    const double mu = 0.5 * (mu_hi + mu_lo);
    DualEvaluation ev = lrp(mu);
    if (in_band(ev.g)) {
      landed = true;
      mu_hi = mu;
      hi_eval = std::move(ev);
      break;
    }
    if (ev.g > upper) {
      mu_hi = mu;
      hi_eval = std::move(ev);
    } else {
      mu_lo = mu;
      lo_eval = std::move(ev);
    }
  }

  if (!options.refit_to_target) {
    // on collapse g(μ) jumped over the band; the μ_max side is feasible (g > r_req)
    Allocation result = std::move(hi_eval.allocation);
    result.exact = landed || in_band(result.sum_rate);
    return result;
  }

  const double rate_tolerance = 1e-12 * (1.0 + target);
  for (int iter = 0; iter < kMaxBisections && hi_eval.g - target > rate_tolerance; ++iter) {
    if (mu_hi - mu_lo < kCollapseRatio * mu_hi) break;
    const double mu = 0.5 * (mu_hi + mu_lo);
    DualEvaluation ev = lrp(mu);
    if (ev.g >= target) {
      mu_hi = mu;
      hi_eval = std::move(ev);
    } else {
      mu_lo = mu;
      lo_eval = std::move(ev);
    }
  }

  Allocation best = refit_powers(hi_eval.allocation, inst, table, target);
  if (lo_eval) {
    try {
      Allocation candidate = refit_powers(lo_eval->allocation, inst, table, target);
      if (candidate.sum_power < best.sum_power) best = std::move(candidate);
    } catch (const InfeasibleError&) {
      // the low side may use only dead channels
    }
  }
  best.exact = landed;
  return best;
}

}  // namespace ospra::detail
