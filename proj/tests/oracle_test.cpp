#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "ospra/baselines.hpp"
#include "ospra/link_formulas.hpp"
#include "ospra/oracle.hpp"
#include "test_support.hpp"

namespace ospra {
namespace {

TEST(Oracle, SinglePairClosedForm) {
  const auto a = oracle_solve({{4.0}, {1.0}, {2.0}, 0.839036, 1e-4});
  EXPECT_EQ(a.decisions[0].mode, TransmissionMode::RelayAided);
  // R(1.6·x) = 0.839036  =>  x = (2^(2·0.839036) − 1)/1.6
  EXPECT_NEAR(a.sum_power, (std::exp2(2.0 * 0.839036) - 1.0) / 1.6, 1e-8);
}

TEST(Oracle, ZeroTarget) {
  const auto a = oracle_solve({{4.0, 1.0}, {1.0, 1.0}, {2.0, 1.0}, 0.0, 1e-4});
  EXPECT_EQ(a.sum_power, 0.0);
}

TEST(Oracle, RejectsLargeAndDeadInstances) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(oracle_solve(testing::random_instance(rng, 5)), ValidationError);
  EXPECT_THROW(oracle_solve({{0.0}, {0.0}, {0.0}, 1.0, 1e-4}), InfeasibleError);
}

TEST(Oracle, HitsTargetAndBeatsEveryConfiguration) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = testing::random_instance(rng, 2);
    const auto a = oracle_solve(inst);
    EXPECT_NEAR(a.sum_rate, inst.r_req, 1e-9 * inst.r_req);
    ASSERT_NO_THROW(validate_structure(a, 2));
    for (std::vector<std::size_t> perm : {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{1, 0}}) {
      for (unsigned mask = 0; mask < 4; ++mask) {
        std::vector<double> gains;
        for (std::size_t k = 0; k < 2; ++k) {
          if (mask & (1u << k)) {
            gains.push_back(effective_gain(inst.gamma_sr[k], inst.gamma_sd[k], inst.gamma_rd[perm[k]]));
          } else {
            gains.push_back(inst.gamma_sd[k]);
            gains.push_back(inst.gamma_sd[perm[k]]);
          }
        }
        const auto p = water_fill_to_rate(gains, inst.r_req);
        EXPECT_LE(a.sum_power, std::accumulate(p.begin(), p.end(), 0.0) + 1e-12);
      }
    }
  }
}

TEST(Oracle, WaterFillMatchesClosedForm) {
  // two equal channels of gain 1, total rate 2: each carries 1 bpos, x = 3
  const auto p = water_fill_to_rate({1.0, 1.0}, 2.0);
  EXPECT_NEAR(p[0], 3.0, 1e-8);
  EXPECT_NEAR(p[1], 3.0, 1e-8);
  // a dead channel gets nothing
  const auto q = water_fill_to_rate({0.0, 2.0}, 1.0);
  EXPECT_EQ(q[0], 0.0);
  EXPECT_NEAR(q[1], 1.5, 1e-8);
}

TEST(Oracle, RestrictionsAreNested) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::random_instance(rng, 1 + trial % 4);
    const double all = oracle_solve(inst, OracleScope::All).sum_power;
    const auto diagonal = oracle_solve(inst, OracleScope::DiagonalPairing);
    const auto direct = oracle_solve(inst, OracleScope::DirectOnly);
    for (const auto& d : diagonal.decisions) EXPECT_EQ(d.k, d.l);
    EXPECT_EQ(relay_pair_count(direct), 0u);
    EXPECT_LE(all, diagonal.sum_power * (1.0 + 1e-12));
    EXPECT_LE(diagonal.sum_power, direct.sum_power * (1.0 + 1e-12));
  }
}

TEST(Oracle, FixedPairingAgreesWithDiagonalOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::random_instance(rng, 2 + trial % 3);
    const auto ref = oracle_solve(inst, OracleScope::DiagonalPairing);
    EXPECT_LE(std::abs(solve_fixed_pairing(inst).sum_power - ref.sum_power) / ref.sum_power, 0.01);
  }
}

}  // namespace
}  // namespace ospra
