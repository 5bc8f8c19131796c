#include "ospra/channel.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ospra {
namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<double> link_gains(const ScenarioConfig& cfg, std::uint64_t realization, Link link, double distance) {
  const auto taps = draw_taps(derive_seed(cfg.seed, realization, link), cfg.num_taps);
  auto gains = subcarrier_power(taps, cfg.num_subcarriers);
  const double scale = std::pow(distance, -cfg.pathloss_exponent) / cfg.noise_power_watts();
  for (double& g : gains) g *= scale;
  return gains;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (num_subcarriers == 0) throw ValidationError("K must be positive");
  if (!(relay_position > 0.0 && relay_position < 1.0)) {
    throw ValidationError("relay position d must lie strictly inside (0, 1)");
  }
  if (num_taps == 0 || num_taps > num_subcarriers) {
    throw ValidationError("num_taps must be in [1, K]");
  }
  if (!std::isfinite(sigma2_dbm)) throw ValidationError("sigma2_dbm must be finite");
  if (!(pathloss_exponent > 0.0) || !std::isfinite(pathloss_exponent)) {
    throw ValidationError("pathloss exponent must be positive");
  }
  if (!std::isfinite(r_req) || r_req < 0.0) throw ValidationError("r_req must be nonnegative");
  if (!std::isfinite(epsilon) || epsilon <= 0.0) throw ValidationError("epsilon must be positive");
}

double ScenarioConfig::noise_power_watts() const noexcept { return dbm_to_watts(sigma2_dbm); }

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) noexcept { return 10.0 * std::log10(watts) + 30.0; }

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t realization, Link link) noexcept {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ realization);
  return splitmix64(h ^ (static_cast<std::uint64_t>(link) + 0x632BE59BD9B4E019ULL));
}

std::vector<std::complex<double>> draw_taps(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 engine(seed);
  // real and imaginary parts each carry half of the 1/count tap variance
  std::normal_distribution<double> component(0.0, std::sqrt(0.5 / static_cast<double>(count)));
  std::vector<std::complex<double>> taps(count);
  for (auto& t : taps) {
    const double re = component(engine);
    const double im = component(engine);
    t = {re, im};
  }
  return taps;
}

std::vector<double> subcarrier_power(const std::vector<std::complex<double>>& taps, std::size_t num_subcarriers) {
  std::vector<double> power(num_subcarriers);
  const double step = -2.0 * std::numbers::pi / static_cast<double>(num_subcarriers);
  for (std::size_t k = 0; k < num_subcarriers; ++k) {
    std::complex<double> h{0.0, 0.0};
    for (std::size_t n = 0; n < taps.size(); ++n) {
      // reduce n·k mod K first so the phase argument stays small
      const auto idx = static_cast<double>((n * k) % num_subcarriers);
      h += taps[n] * std::polar(1.0, step * idx);
    }
    power[k] = std::norm(h);
  }
  return power;
}

ChannelInstance generate_instance(const ScenarioConfig& cfg, std::uint64_t realization) {
  cfg.validate();
  ChannelInstance inst;
  inst.gamma_sd = link_gains(cfg, realization, Link::SourceDestination, 1.0);
  inst.gamma_sr = link_gains(cfg, realization, Link::SourceRelay, cfg.relay_position);
  inst.gamma_rd = link_gains(cfg, realization, Link::RelayDestination, 1.0 - cfg.relay_position);
  inst.r_req = cfg.r_req;
  inst.epsilon = cfg.epsilon;
  return inst;
}

}  // namespace ospra
