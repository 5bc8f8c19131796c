#pragma once

// JSON instance/allocation documents and number formatting for machine output.
//
// Instance document:
//   {"K": 2, "gamma_sr": [...], "gamma_sd": [...], "gamma_rd": [...],
//    "r_req": 100, "epsilon": 1}
//
// Allocation document (subcarrier indices are 0-based):
//   {"protocol": "osp", "power_unit": "W", "exact": true, "mu": ...,
//    "sum_power": ..., "sum_rate": ...,
//    "pairs": [{"k": 0, "l": 1, "mode": "relay"|"direct", "total_power": ...,
//               "slot1_power": ..., "slot2_source_power": ...,
//               "slot2_relay_power": ..., "rate": ...}, ...]}

#include <string>
#include <string_view>

#include "ospra/types.hpp"

namespace ospra {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

std::string instance_to_json(const ChannelInstance& inst);

/// Throws ValidationError on malformed JSON, missing fields, or an instance
/// violating its invariants.
ChannelInstance instance_from_json(std::string_view text);

/// With `dbm`, power fields are written in dBm (zero power as null) for display;
/// such documents are not accepted by allocation_from_json.
std::string allocation_to_json(const Allocation& alloc, std::string_view protocol = "osp", bool dbm = false);

Allocation allocation_from_json(std::string_view text);

}  // namespace ospra
