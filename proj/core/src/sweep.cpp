#include "ospra/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <ostream>
#include <thread>

#include "ospra/baselines.hpp"
#include "ospra/dual_solver.hpp"
#include "ospra/io.hpp"

namespace ospra {

RealizationOutcome evaluate_realization(const ScenarioConfig& cfg, std::uint64_t realization) {
  const ChannelInstance inst = generate_instance(cfg, realization);
  RealizationOutcome out;
  try {
    const Allocation osp = solve(inst);
    const Allocation fsp = solve_fixed_pairing(inst);
    const Allocation direct = solve_direct_only(inst);
    out.p_osp = osp.sum_power;
    out.p_fsp = fsp.sum_power;
    out.p_direct = direct.sum_power;
    out.n_sp = relay_pair_count(osp);
    out.n_fsp = relay_pair_count(fsp);
    out.osp_exact = osp.exact;
    out.fsp_exact = fsp.exact;
  } catch (const InfeasibleError&) {
    out = RealizationOutcome{};
    out.feasible = false;
  }
  return out;
}

namespace {

SweepResult aggregate(const ScenarioConfig& cfg, const std::vector<RealizationOutcome>& outcomes) {
  SweepResult r;
  r.num_subcarriers = cfg.num_subcarriers;
  r.relay_position = cfg.relay_position;
  const auto k = static_cast<double>(cfg.num_subcarriers);
  for (const auto& o : outcomes) {
    if (!o.feasible) {
      ++r.infeasible_count;
      continue;
    }
    ++r.num_runs;
    r.avg_p_osp += o.p_osp;
    r.avg_p_fsp += o.p_fsp;
    r.avg_p_direct += o.p_direct;
    r.avg_relay_fraction_osp += static_cast<double>(o.n_sp) / k;
    r.avg_relay_fraction_fsp += static_cast<double>(o.n_fsp) / k;
    r.fallback_count += (o.osp_exact ? 0 : 1) + (o.fsp_exact ? 0 : 1);
  }
  if (r.num_runs > 0) {
    const auto n = static_cast<double>(r.num_runs);
    r.avg_p_osp /= n;
    r.avg_p_fsp /= n;
    r.avg_p_direct /= n;
    r.avg_relay_fraction_osp /= n;
    r.avg_relay_fraction_fsp /= n;
  }
  return r;
}

}  // namespace

std::vector<SweepResult> run_sweep(const std::vector<ScenarioConfig>& grid, std::size_t runs, std::size_t threads) {
  if (runs == 0) throw ValidationError("runs must be positive");
  for (const auto& cfg : grid) cfg.validate();

  std::vector<SweepResult> results;
  results.reserve(grid.size());
  for (const auto& cfg : grid) {
    std::vector<RealizationOutcome> outcomes(runs);
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, runs);
    if (workers == 1) {
      for (std::size_t i = 0; i < runs; ++i) outcomes[i] = evaluate_realization(cfg, i);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::atomic<bool> failed{false};
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < runs && !failed; i = next++) {
            try {
              outcomes[i] = evaluate_realization(cfg, i);
            } catch (...) {
              if (!failed.exchange(true)) failure = std::current_exception();
            }
          }
        });
      }
      pool.clear();
      if (failure) std::rethrow_exception(failure);
    }
    results.push_back(aggregate(cfg, outcomes));
  }
  return results;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepResult>& results, bool dbm) {
  auto power = [dbm](double watts) { return format_double(dbm ? watts_to_dbm(watts) : watts); };
  out << "K,d,runs,avg_p_osp,avg_p_fsp,avg_p_direct,avg_nsp_frac,avg_nfsp_frac,fallback_count\n";
  for (const auto& r : results) {
    out << r.num_subcarriers << ',' << format_double(r.relay_position) << ',' << r.num_runs << ','
        << power(r.avg_p_osp) << ',' << power(r.avg_p_fsp) << ',' << power(r.avg_p_direct) << ','
        << format_double(r.avg_relay_fraction_osp) << ',' << format_double(r.avg_relay_fraction_fsp) << ','
        << r.fallback_count << '\n';
  }
}

}  // namespace ospra
