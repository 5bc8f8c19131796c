#pragma once

// Closed-form per-subcarrier and per-pair formulas for two-slot DF relaying.
//
// A relay-aided pair (k, l) with total power P reaches rate(Γ_kl · P), where
// Γ_kl is the effective gain returned by effective_gain(). For a fixed price
// μ on the rate constraint, the power minimizing x − μ·rate(G·x) is
// lambda_power(μ, G), a water-filling level of (log2 e / 2)·μ.

#include <utility>

#include "ospra/types.hpp"

namespace ospra {

/// (1/2)·log2(1 + x) bits per OFDM symbol.
double rate(double x) noexcept;

/// Effective gain of a relay-aided pair. Falls back to min(gsr, gsd) when the
/// relay cannot outperform the direct link (min(gsr, grd) <= gsd).
double effective_gain(double gsr, double gsd, double grd) noexcept;

struct PowerSplit {
  double slot1_power = 0.0;
  double relay_power = 0.0;
};

/// Rate-optimal split of total pair power P between the source (slot 1) and
/// the relay (slot 2). slot1_power + relay_power == P.
PowerSplit power_split(double total_power, double gsr, double gsd, double grd) noexcept;

/// [ (log2 e / 2)·μ − 1/G ]⁺, with G = 0 mapped to zero power.
double lambda_power(double mu, double gain) noexcept;

/// Lagrangian contribution of one channel at its optimal power:
/// Λ(μ,G) − μ·rate(G·Λ(μ,G)). Always <= 0.
double metric_relay(double mu, double pair_gain) noexcept;

/// Sum of the single-channel metrics of the two direct links of a virtual pair.
double metric_direct(double mu, double gsd_k, double gsd_l) noexcept;

/// Γ_kl for every slot-1 k and slot-2 l.
PairGainTable pair_gain_table(const ChannelInstance& inst);

}  // namespace ospra
