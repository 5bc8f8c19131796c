#include "ospra/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dual_search.hpp"

namespace ospra {
namespace {

double direct_power(double level, double gain) noexcept {
  if (gain <= 0.0) return 0.0;
  return std::max(0.0, level - 1.0 / gain);
}

// Rate carried by one slot when every subcarrier is filled to `level`.
double slot_rate(double level, const std::vector<double>& gains) noexcept {
  double total = 0.0;
  for (double g : gains) total += rate(g * direct_power(level, g));
  return total;
}

}  // namespace

DualEvaluation solve_lrp_fixed_pairing(double mu, const ChannelInstance& inst, const PairGainTable& table) {
  if (!std::isfinite(mu) || mu < 0.0) throw ValidationError("mu must be finite and nonnegative");
  const std::size_t k = inst.size();
  if (table.size() != k) throw ValidationError("pair gain table does not match instance size");

  Allocation alloc;
  alloc.decisions.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double a = metric_relay(mu, table(i, i));
    const double b = metric_direct(mu, inst.gamma_sd[i], inst.gamma_sd[i]);
    alloc.decisions.push_back(detail::make_decision(mu, inst, table, i, i, detail::pick_mode(a, b)));
  }
  return detail::finish_evaluation(mu, inst.r_req, std::move(alloc));
}

Allocation solve_fixed_pairing(const ChannelInstance& inst, const SolverOptions& options) {
  inst.validate();
  const PairGainTable table = pair_gain_table(inst);
  // Only diagonal pairs are reachable, so only they count toward feasibility.
  PairGainTable diagonal(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) diagonal(i, i) = table(i, i);
  return detail::dual_search(inst, diagonal, options,
                             [&](double mu) { return solve_lrp_fixed_pairing(mu, inst, table); });
}

Allocation solve_direct_only(const ChannelInstance& inst) {
  inst.validate();
  const std::size_t k = inst.size();
  if (inst.r_req == 0.0) return detail::zero_allocation(k);
  if (std::none_of(inst.gamma_sd.begin(), inst.gamma_sd.end(), [](double g) { return g > 0.0; })) {
    throw InfeasibleError("direct transmission impossible: every source-destination gain is zero");
  }

  const double target = 0.5 * inst.r_req;
  const double tolerance = 1e-9 * (1.0 + inst.r_req);

  double lo = 0.0;
  double hi = 1.0;
  while (slot_rate(hi, inst.gamma_sd) <= target) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw InfeasibleError("direct-only water level diverged");
  }
  // Keep `hi` on the feasible side so the returned rate never undershoots.
  while (slot_rate(hi, inst.gamma_sd) - target > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (slot_rate(mid, inst.gamma_sd) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  Allocation alloc;
  alloc.decisions.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    PairDecision d;
    d.k = i;
    d.l = i;
    d.mode = TransmissionMode::Direct;
    d.slot1_power = direct_power(hi, inst.gamma_sd[i]);
    d.slot2_source_power = d.slot1_power;
    d.total_power = d.slot1_power + d.slot2_source_power;
    d.rate = 2.0 * rate(inst.gamma_sd[i] * d.slot1_power);
    alloc.decisions.push_back(d);
  }
  recompute_totals(alloc);
  // water level λ = (log2 e / 2)·μ
  alloc.mu = 2.0 * hi / std::numbers::log2e;
  alloc.exact = alloc.sum_rate >= inst.r_req - 2.0 * tolerance && alloc.sum_rate <= inst.r_req + inst.epsilon;
  return alloc;
}

std::size_t relay_pair_count(const Allocation& alloc) noexcept {
  return static_cast<std::size_t>(std::count_if(alloc.decisions.begin(), alloc.decisions.end(), [](const auto& d) {
    return d.mode == TransmissionMode::RelayAided;
  }));
}

}  // namespace ospra
