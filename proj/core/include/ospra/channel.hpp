#pragma once

// Seeded frequency-selective Rayleigh channels for a relay placed on the
// straight line between source and destination (source-destination distance
// 1 km, source-relay d km, relay-destination 1 − d km).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ospra/types.hpp"

namespace ospra {

enum class Link : std::uint64_t { SourceDestination = 0, SourceRelay = 1, RelayDestination = 2 };

struct ScenarioConfig {
  std::size_t num_subcarriers = 16;
  double relay_position = 0.5;  // km from the source, strictly inside (0, 1)
  double sigma2_dbm = -50.0;
  double pathloss_exponent = 3.0;
  std::size_t num_taps = 8;
  double r_req = 100.0;
  double epsilon = 1.0;
  std::uint64_t seed = 0;

  /// Throws ValidationError on d outside (0,1), num_taps > K, or non-positive values.
  void validate() const;
  double noise_power_watts() const noexcept;
};

double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts) noexcept;

/// Stateless counter-based seed for one link of one realization.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t realization, Link link) noexcept;

/// `count` circular complex Gaussian taps, each of variance 1/count.
std::vector<std::complex<double>> draw_taps(std::uint64_t seed, std::size_t count);

/// |H_k|² of the K-point DFT of the zero-padded impulse response.
std::vector<double> subcarrier_power(const std::vector<std::complex<double>>& taps, std::size_t num_subcarriers);

/// Realization `realization` of the scenario. Identical (cfg, realization)
/// always yield the identical instance.
ChannelInstance generate_instance(const ScenarioConfig& cfg, std::uint64_t realization = 0);

}  // namespace ospra
