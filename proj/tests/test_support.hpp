#pragma once

// Random instance generators and brute-force references shared by the unit
// and acceptance suites. Nothing here calls into the solver code paths.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "ospra/hungarian.hpp"
#include "ospra/types.hpp"

namespace ospra::testing {

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

/// Gains log-uniform in [gain_lo, gain_hi], r_req uniform in [r_lo, r_hi],
/// epsilon = eps_ratio · r_req.
inline ChannelInstance random_instance(std::mt19937_64& rng, std::size_t k, double gain_lo = 1e-2,
                                       double gain_hi = 1e2, double r_lo = 1.0, double r_hi = 10.0,
                                       double eps_ratio = 1e-4) {
  ChannelInstance inst;
  for (std::size_t i = 0; i < k; ++i) {
    inst.gamma_sr.push_back(log_uniform(rng, gain_lo, gain_hi));
    inst.gamma_sd.push_back(log_uniform(rng, gain_lo, gain_hi));
    inst.gamma_rd.push_back(log_uniform(rng, gain_lo, gain_hi));
  }
  inst.r_req = std::uniform_real_distribution<double>(r_lo, r_hi)(rng);
  inst.epsilon = eps_ratio * inst.r_req;
  return inst;
}

inline CostMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  CostMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = u(rng);
  }
  return c;
}

/// Minimum over all n! permutations, each summed in row order.
inline double brute_force_assignment_cost(const CostMatrix& c) {
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) total += c(i, perm[i]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool is_permutation_of_indices(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

/// Powers that minimize x − μ·(1/2)log2(1 + G·x), evaluated directly by
/// the stationarity condition (no shared formula code).
inline double direct_lambda(double mu, double gain) {
  if (gain <= 0.0) return 0.0;
  return std::max(0.0, mu / (2.0 * std::log(2.0)) - 1.0 / gain);
}

inline double half_log_rate(double x) { return 0.5 * std::log(1.0 + x) / std::log(2.0); }

}  // namespace ospra::testing
