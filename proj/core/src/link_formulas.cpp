#include "ospra/link_formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ospra {
namespace {

constexpr double kHalfLog2e = 0.5 * std::numbers::log2e;

bool relay_helps(double gsr, double gsd, double grd) noexcept {
  return std::min(gsr, grd) > gsd;
}

}  // namespace

double rate(double x) noexcept { return 0.5 * std::log2(1.0 + x); }

double effective_gain(double gsr, double gsd, double grd) noexcept {
  if (relay_helps(gsr, gsd, grd)) return gsr * grd / (gsr - gsd + grd);
  return std::min(gsr, gsd);
}

PowerSplit power_split(double total_power, double gsr, double gsd, double grd) noexcept {
  if (!relay_helps(gsr, gsd, grd)) return {total_power, 0.0};
  const double slot1 = total_power * grd / (gsr - gsd + grd);
  return {slot1, total_power - slot1};
}

double lambda_power(double mu, double gain) noexcept {
  if (gain <= 0.0) return 0.0;
  return std::max(0.0, kHalfLog2e * mu - 1.0 / gain);
}

double metric_relay(double mu, double pair_gain) noexcept {
  const double power = lambda_power(mu, pair_gain);
  if (power == 0.0) return 0.0;
  return power - mu * rate(pair_gain * power);
}

double metric_direct(double mu, double gsd_k, double gsd_l) noexcept {
  return metric_relay(mu, gsd_k) + metric_relay(mu, gsd_l);
}

PairGainTable pair_gain_table(const ChannelInstance& inst) {
  const std::size_t k = inst.size();
  PairGainTable table(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table(i, j) = effective_gain(inst.gamma_sr[i], inst.gamma_sd[i], inst.gamma_rd[j]);
    }
  }
  return table;
}

}  // namespace ospra
