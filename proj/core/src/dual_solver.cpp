#include "ospra/dual_solver.hpp"

#include <algorithm>
#include <cmath>

#include "dual_search.hpp"
#include "ospra/hungarian.hpp"

namespace ospra {

DualEvaluation solve_lrp(double mu, const ChannelInstance& inst, const PairGainTable& table) {
  if (!std::isfinite(mu) || mu < 0.0) throw ValidationError("mu must be finite and nonnegative");
  const std::size_t k = inst.size();
  if (table.size() != k) throw ValidationError("pair gain table does not match instance size");

  // Per-channel direct metrics are shared by every pair touching that channel.
  std::vector<double> direct_metric(k);
  for (std::size_t i = 0; i < k; ++i) direct_metric[i] = metric_relay(mu, inst.gamma_sd[i]);

  CostMatrix relay_metric(k);
  CostMatrix combined(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double a = metric_relay(mu, table(i, j));
      const double b = direct_metric[i] + direct_metric[j];
      relay_metric(i, j) = a;
      combined(i, j) = std::min(a, b);
    }
  }

  const AssignmentResult matching = hungarian(combined);

  Allocation alloc;
  alloc.decisions.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = matching.column_of_row[i];
    const TransmissionMode mode = detail::pick_mode(relay_metric(i, j), direct_metric[i] + direct_metric[j]);
    alloc.decisions.push_back(detail::make_decision(mu, inst, table, i, j, mode));
  }
  return detail::finish_evaluation(mu, inst.r_req, std::move(alloc));
}

Allocation solve(const ChannelInstance& inst, const SolverOptions& options) {
  inst.validate();
  const PairGainTable table = pair_gain_table(inst);
  return detail::dual_search(inst, table, options, [&](double mu) { return solve_lrp(mu, inst, table); });
}

Allocation refit_powers(const Allocation& alloc, const ChannelInstance& inst, const PairGainTable& table,
                        double target) {
  validate_structure(alloc, inst.size());
  auto at_level = [&](double mu) {
    Allocation out;
    out.decisions.reserve(alloc.decisions.size());
    for (const auto& d : alloc.decisions) {
      out.decisions.push_back(detail::make_decision(mu, inst, table, d.k, d.l, d.mode));
    }
    recompute_totals(out);
    out.mu = mu;
    out.exact = alloc.exact;
    return out;
  };
  if (target <= 0.0) return at_level(0.0);

  double lo = 0.0;
  double hi = std::max(alloc.mu, 1.0);
  Allocation best = at_level(hi);
  while (best.sum_rate < target) {
    hi *= 2.0;
    if (hi > detail::kMuCeiling) throw InfeasibleError("pairing cannot reach the rate target");
    best = at_level(hi);
  }
  const double tolerance = 1e-12 * (1.0 + target);
  while (best.sum_rate - target > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    Allocation trial = at_level(mid);
    if (trial.sum_rate >= target) {
      hi = mid;
      best = std::move(trial);
    } else {
      lo = mid;
    }
  }
  return best;
}

double evaluate_sum_rate(const Allocation& alloc, const ChannelInstance& inst, const PairGainTable& table) {
  validate_structure(alloc, inst.size());
  double total = 0.0;
  for (const auto& d : alloc.decisions) {
    if (d.mode == TransmissionMode::RelayAided) {
      total += rate(table(d.k, d.l) * d.total_power);
    } else {
      total += rate(inst.gamma_sd[d.k] * d.slot1_power) + rate(inst.gamma_sd[d.l] * d.slot2_source_power);
    }
  }
  return total;
}

}  // namespace ospra
