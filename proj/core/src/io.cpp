#include "ospra/io.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

#include "ospra/channel.hpp"

namespace ospra {
namespace {

using nlohmann::json;

template <class T>
T require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
  }
}

json parse_object(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("expected a JSON object");
  return doc;
}

TransmissionMode parse_mode(const std::string& s) {
  if (s == "relay") return TransmissionMode::RelayAided;
  if (s == "direct") return TransmissionMode::Direct;
  throw ValidationError("unknown mode \"" + s + "\"");
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return {buf, res.ptr};
}

std::string instance_to_json(const ChannelInstance& inst) {
  json doc;
  doc["K"] = inst.size();
  doc["gamma_sr"] = inst.gamma_sr;
  doc["gamma_sd"] = inst.gamma_sd;
  doc["gamma_rd"] = inst.gamma_rd;
  doc["r_req"] = inst.r_req;
  doc["epsilon"] = inst.epsilon;
  return doc.dump(2) + "\n";
}

ChannelInstance instance_from_json(std::string_view text) {
  const json doc = parse_object(text);
  ChannelInstance inst;
  const auto k = require<std::int64_t>(doc, "K");
  inst.gamma_sr = require<std::vector<double>>(doc, "gamma_sr");
  inst.gamma_sd = require<std::vector<double>>(doc, "gamma_sd");
  inst.gamma_rd = require<std::vector<double>>(doc, "gamma_rd");
  inst.r_req = require<double>(doc, "r_req");
  inst.epsilon = require<double>(doc, "epsilon");
  if (k <= 0 || static_cast<std::size_t>(k) != inst.gamma_sd.size()) {
    throw ValidationError("K does not match the gain array lengths");
  }
  inst.validate();
  return inst;
}

std::string allocation_to_json(const Allocation& alloc, std::string_view protocol, bool dbm) {
  auto power = [dbm](double watts) -> json {
    if (!dbm) return watts;
    if (watts <= 0.0) return nullptr;
    return watts_to_dbm(watts);
  };
  json doc;
  doc["protocol"] = std::string(protocol);
  doc["power_unit"] = dbm ? "dBm" : "W";
  doc["exact"] = alloc.exact;
  doc["mu"] = alloc.mu;
  doc["sum_power"] = power(alloc.sum_power);
  doc["sum_rate"] = alloc.sum_rate;
  json pairs = json::array();
  for (const auto& d : alloc.decisions) {
    pairs.push_back({{"k", d.k},
                     {"l", d.l},
                     {"mode", to_string(d.mode)},
                     {"total_power", power(d.total_power)},
                     {"slot1_power", power(d.slot1_power)},
                     {"slot2_source_power", power(d.slot2_source_power)},
                     {"slot2_relay_power", power(d.slot2_relay_power)},
                     {"rate", d.rate}});
  }
  doc["pairs"] = std::move(pairs);
  return doc.dump(2) + "\n";
}

Allocation allocation_from_json(std::string_view text) {
  const json doc = parse_object(text);
  if (doc.value("power_unit", "W") != "W") throw ValidationError("only watt-denominated allocations can be read");
  Allocation alloc;
  alloc.exact = require<bool>(doc, "exact");
  alloc.mu = require<double>(doc, "mu");
  alloc.sum_power = require<double>(doc, "sum_power");
  alloc.sum_rate = require<double>(doc, "sum_rate");
  if (!doc.contains("pairs") || !doc["pairs"].is_array()) throw ValidationError("missing \"pairs\" array");
  for (const auto& p : doc["pairs"]) {
    PairDecision d;
    d.k = require<std::size_t>(p, "k");
    d.l = require<std::size_t>(p, "l");
    d.mode = parse_mode(require<std::string>(p, "mode"));
    d.total_power = require<double>(p, "total_power");
    d.slot1_power = require<double>(p, "slot1_power");
    d.slot2_source_power = require<double>(p, "slot2_source_power");
    d.slot2_relay_power = require<double>(p, "slot2_relay_power");
    d.rate = require<double>(p, "rate");
    alloc.decisions.push_back(d);
  }
  validate_structure(alloc, alloc.decisions.size());
  return alloc;
}

}  // namespace ospra
