#include "ospra/types.hpp"

#include <cmath>
#include <string>

namespace ospra {
namespace {

void check_gains(const std::vector<double>& gains, const char* name) {
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (!std::isfinite(gains[i]) || gains[i] < 0.0) {
      throw ValidationError(std::string(name) + "[" + std::to_string(i) +
                            "] must be finite and nonnegative");
    }
  }
}

}  // namespace

void ChannelInstance::validate() const {
  const std::size_t k = gamma_sd.size();
  if (k == 0) throw ValidationError("instance must have at least one subcarrier");
  if (gamma_sr.size() != k || gamma_rd.size() != k) {
    throw ValidationError("gamma_sr, gamma_sd and gamma_rd must all have length K");
  }
  check_gains(gamma_sr, "gamma_sr");
  check_gains(gamma_sd, "gamma_sd");
  check_gains(gamma_rd, "gamma_rd");
  if (!std::isfinite(r_req) || r_req < 0.0) {
    throw ValidationError("r_req must be finite and nonnegative");
  }
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw ValidationError("epsilon must be finite and positive");
  }
}

const char* to_string(TransmissionMode mode) noexcept {
  return mode == TransmissionMode::RelayAided ? "relay" : "direct";
}

void recompute_totals(Allocation& alloc) {
  alloc.sum_power = 0.0;
  alloc.sum_rate = 0.0;
  for (const auto& d : alloc.decisions) {
    alloc.sum_power += d.total_power;
    alloc.sum_rate += d.rate;
  }
}

void validate_structure(const Allocation& alloc, std::size_t k) {
  if (alloc.decisions.size() != k) {
    throw ValidationError("allocation must hold exactly K decisions");
  }
  std::vector<bool> seen(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& d = alloc.decisions[i];
    if (d.k != i) throw ValidationError("decisions must be ordered by slot-1 index");
    if (d.l >= k || seen[d.l]) throw ValidationError("pairing is not a permutation");
    seen[d.l] = true;
    if (d.mode == TransmissionMode::RelayAided && d.slot2_source_power != 0.0) {
      throw ValidationError("relay-aided pair carries slot-2 source power");
    }
    if (d.mode == TransmissionMode::Direct && d.slot2_relay_power != 0.0) {
      throw ValidationError("direct pair carries relay power");
    }
  }
}

}  // namespace ospra
