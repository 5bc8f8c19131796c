#pragma once

// Domain types shared by every ospra module.
//
// Gains are normalized by the per-subcarrier noise variance before they reach
// any of these types, so the solver works in unit-free Γ = |h|²/σ² terms and
// reports powers in watts.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospra {

/// Raised for malformed inputs (wrong lengths, negative or non-finite values).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when no allocation can reach the requested rate.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One two-slot OFDM channel realization plus the rate target.
struct ChannelInstance {
  std::vector<double> gamma_sr;  // source -> relay, indexed by slot-1 subcarrier
  std::vector<double> gamma_sd;  // source -> destination, both slots
  std::vector<double> gamma_rd;  // relay -> destination, indexed by slot-2 subcarrier
  double r_req = 0.0;            // bits per OFDM symbol
  double epsilon = 1.0;

  std::size_t size() const noexcept { return gamma_sd.size(); }

  /// Throws ValidationError if any invariant is broken.
  void validate() const;
};

/// K×K table of effective relay-aided gains, row = slot-1 subcarrier.
class PairGainTable {
 public:
  PairGainTable() = default;
  explicit PairGainTable(std::size_t k) : k_(k), gains_(k * k, 0.0) {}

  std::size_t size() const noexcept { return k_; }
  double operator()(std::size_t k, std::size_t l) const { return gains_[k * k_ + l]; }
  double& operator()(std::size_t k, std::size_t l) { return gains_[k * k_ + l]; }

 private:
  std::size_t k_ = 0;
  std::vector<double> gains_;
};

enum class TransmissionMode { RelayAided, Direct };

const char* to_string(TransmissionMode mode) noexcept;

/// Resolved decision for slot-1 subcarrier `k` paired with slot-2 subcarrier `l`.
struct PairDecision {
  std::size_t k = 0;
  std::size_t l = 0;
  TransmissionMode mode = TransmissionMode::Direct;
  double total_power = 0.0;
  double slot1_power = 0.0;
  double slot2_source_power = 0.0;  // zero when relay-aided
  double slot2_relay_power = 0.0;   // zero when direct
  double rate = 0.0;

  bool operator==(const PairDecision&) const = default;
};

/// A complete resource allocation: pairing, per-pair mode and powers.
struct Allocation {
  std::vector<PairDecision> decisions;  // one per slot-1 subcarrier, ordered by k
  double sum_power = 0.0;
  double sum_rate = 0.0;
  double mu = 0.0;
  // False when the dual search could not land inside [r_req, r_req + epsilon]
  // and returned the closest feasible (rate-overshooting) evaluation instead.
  bool exact = true;

  bool operator==(const Allocation&) const = default;
};

/// Recomputes sum_power and sum_rate from the per-pair decisions.
void recompute_totals(Allocation& alloc);

/// Throws ValidationError unless the pairing is a permutation of 0..K-1 and
/// the per-mode power fields are consistent.
void validate_structure(const Allocation& alloc, std::size_t k);

}  // namespace ospra
