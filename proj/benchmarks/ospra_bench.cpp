#include <benchmark/benchmark.h>

#include <random>

#include "ospra/baselines.hpp"
#include "ospra/channel.hpp"
#include "ospra/dual_solver.hpp"
#include "ospra/hungarian.hpp"

namespace {

ospra::ChannelInstance reference_instance(std::size_t k) {
  ospra::ScenarioConfig cfg;
  cfg.num_subcarriers = k;
  cfg.seed = 1;
  return ospra::generate_instance(cfg);
}

void BM_Hungarian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  ospra::CostMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ospra::hungarian(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_SolveLrp(benchmark::State& state) {
  const auto inst = reference_instance(static_cast<std::size_t>(state.range(0)));
  const auto table = ospra::pair_gain_table(inst);
  const double mu = ospra::solve(inst).mu;
  for (auto _ : state) benchmark::DoNotOptimize(ospra::solve_lrp(mu, inst, table));
}
BENCHMARK(BM_SolveLrp)->Arg(16)->Arg(32)->Arg(64);

void BM_Solve(benchmark::State& state) {
  const auto inst = reference_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ospra::solve(inst));
}
BENCHMARK(BM_Solve)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FixedPairing(benchmark::State& state) {
  const auto inst = reference_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ospra::solve_fixed_pairing(inst));
}
BENCHMARK(BM_FixedPairing)->Arg(16)->Arg(64);

void BM_DirectOnly(benchmark::State& state) {
  const auto inst = reference_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ospra::solve_direct_only(inst));
}
BENCHMARK(BM_DirectOnly)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
