#include "ospra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "ospra/link_formulas.hpp"

namespace ospra {
namespace {

double fill(double level, double gain) noexcept { return gain > 0.0 ? std::max(0.0, level - 1.0 / gain) : 0.0; }

double filled_rate(double level, const std::vector<double>& gains) noexcept {
  double total = 0.0;
  for (double g : gains) total += rate(g * fill(level, g));
  return total;
}

struct Candidate {
  double power = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pairing;
  unsigned relay_mask = 0;
  std::vector<double> channel_power;
};

}  // namespace

std::vector<double> water_fill_to_rate(const std::vector<double>& gains, double target) {
  std::vector<double> power(gains.size(), 0.0);
  if (target <= 0.0) return power;
  if (std::none_of(gains.begin(), gains.end(), [](double g) { return g > 0.0; })) {
    throw InfeasibleError("no channel with positive gain");
  }
  const double tolerance = 1e-10 * (1.0 + target);
  double lo = 0.0;
  double hi = 1.0;
  while (filled_rate(hi, gains) < target) hi *= 2.0;
  while (filled_rate(hi, gains) - target > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (filled_rate(mid, gains) >= target ? hi : lo) = mid;
  }
  for (std::size_t i = 0; i < gains.size(); ++i) power[i] = fill(hi, gains[i]);
  return power;
}

Allocation oracle_solve(const ChannelInstance& inst, OracleScope scope) {
  inst.validate();
  const std::size_t k = inst.size();
  if (k > kOracleMaxSubcarriers) throw ValidationError("oracle supports at most 4 subcarriers");

  std::vector<std::size_t> pairing(k);
  std::iota(pairing.begin(), pairing.end(), std::size_t{0});
  const unsigned mask_count = scope == OracleScope::DirectOnly ? 1u : (1u << k);

  Candidate best;
  bool any_reachable = false;
  std::vector<double> gains;
  do {
    for (unsigned mask = 0; mask < mask_count; ++mask) {
      gains.clear();
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = pairing[i];
        if (mask & (1u << i)) {
          gains.push_back(effective_gain(inst.gamma_sr[i], inst.gamma_sd[i], inst.gamma_rd[j]));
        } else {
          gains.push_back(inst.gamma_sd[i]);
          gains.push_back(inst.gamma_sd[j]);
        }
      }
      if (inst.r_req > 0.0 && std::none_of(gains.begin(), gains.end(), [](double g) { return g > 0.0; })) {
        continue;
      }
      any_reachable = true;
      auto power = water_fill_to_rate(gains, inst.r_req);
      const double total = std::accumulate(power.begin(), power.end(), 0.0);
      if (total < best.power) {
        best = {total, pairing, mask, std::move(power)};
      }
    }
  } while (scope == OracleScope::All && std::next_permutation(pairing.begin(), pairing.end()));

  if (!any_reachable) throw InfeasibleError("every channel gain is zero; no positive rate is reachable");

  Allocation alloc;
  alloc.decisions.reserve(k);
  std::size_t channel = 0;
  double level = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    PairDecision d;
    d.k = i;
    d.l = best.pairing[i];
    if (best.relay_mask & (1u << i)) {
      const double gain = effective_gain(inst.gamma_sr[i], inst.gamma_sd[i], inst.gamma_rd[d.l]);
      d.mode = TransmissionMode::RelayAided;
      d.total_power = best.channel_power[channel++];
      const PowerSplit split = power_split(d.total_power, inst.gamma_sr[i], inst.gamma_sd[i], inst.gamma_rd[d.l]);
      d.slot1_power = split.slot1_power;
      d.slot2_relay_power = split.relay_power;
      d.rate = rate(gain * d.total_power);
      if (d.total_power > 0.0) level = d.total_power + 1.0 / gain;
    } else {
      d.mode = TransmissionMode::Direct;
      d.slot1_power = best.channel_power[channel++];
      d.slot2_source_power = best.channel_power[channel++];
      d.total_power = d.slot1_power + d.slot2_source_power;
      d.rate = rate(inst.gamma_sd[i] * d.slot1_power) + rate(inst.gamma_sd[d.l] * d.slot2_source_power);
      if (d.slot1_power > 0.0) level = d.slot1_power + 1.0 / inst.gamma_sd[i];
    }
    alloc.decisions.push_back(d);
  }
  recompute_totals(alloc);
  alloc.mu = 2.0 * level / std::numbers::log2e;
  alloc.exact = true;
  return alloc;
}

}  // namespace ospra
