// Copyright 2026 The WDP Dispatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON plant configs.
//
//   {
//     "tdp":    {"alpha_h": 4, "beta_h": 0.05, "w_min": 0, "w_max": 3000,
//                "cost_a": 0.008, "cost_b": 2, "cost_c": 0},
//     "rodp":   {"alpha_r": 166.67, "w_min": 0, "w_max": 8333},
//     "tariff": {"pi_plus": 270, "pi_minus": 100, "pi_zero": 0, "pi_w": 1},
//     "water_demand": 0,
//     "interval_hours": 1
//   }
//
// Lower bounds, cost_c, pi_zero, water_demand and interval_hours are optional
// (0, 0, 0, 0, 1). Everything else is required. Unknown keys are rejected so
// a typo cannot silently fall back to a default.

#pragma once

#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "wdp/model.hpp"

namespace wdp::io {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, const std::string& where,
                           std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("unknown key '" + where + key + "'");
  }
}

inline const json& section(const json& root, const char* name) {
  if (!root.contains(name)) throw ConfigError(std::string("missing section '") + name + "'");
  const json& s = root.at(name);
  if (!s.is_object()) throw ConfigError(std::string("'") + name + "' must be an object");
  return s;
}

inline double number(const json& obj, const std::string& where, const char* key,
                     std::optional<double> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError("missing key '" + where + key + "'");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("'" + where + key + "' must be a number");
  return v.get<double>();
}

}  // namespace detail

// Parses without validating; pass the result to validate_config.
inline PlantConfig config_from_json(const nlohmann::json& root) {
  using detail::number;
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  detail::reject_unknown(root, "",
                         {"tdp", "rodp", "tariff", "water_demand", "interval_hours"});
  PlantConfig c;

  const auto& tdp = detail::section(root, "tdp");
  detail::reject_unknown(tdp, "tdp.",
                         {"alpha_h", "beta_h", "w_min", "w_max", "cost_a", "cost_b", "cost_c"});
  c.tdp.alpha_h = number(tdp, "tdp.", "alpha_h");
  c.tdp.beta_h = number(tdp, "tdp.", "beta_h");
  c.tdp.w_min = number(tdp, "tdp.", "w_min", 0.0);
  c.tdp.w_max = number(tdp, "tdp.", "w_max");
  c.tdp.cost_a = number(tdp, "tdp.", "cost_a");
  c.tdp.cost_b = number(tdp, "tdp.", "cost_b");
  c.tdp.cost_c = number(tdp, "tdp.", "cost_c", 0.0);

  const auto& rodp = detail::section(root, "rodp");
  detail::reject_unknown(rodp, "rodp.", {"alpha_r", "w_min", "w_max"});
  c.rodp.alpha_r = number(rodp, "rodp.", "alpha_r");
  c.rodp.w_min = number(rodp, "rodp.", "w_min", 0.0);
  c.rodp.w_max = number(rodp, "rodp.", "w_max");

  const auto& tariff = detail::section(root, "tariff");
  detail::reject_unknown(tariff, "tariff.", {"pi_plus", "pi_minus", "pi_zero", "pi_w"});
  c.tariff.pi_plus = number(tariff, "tariff.", "pi_plus");
  c.tariff.pi_minus = number(tariff, "tariff.", "pi_minus");
  c.tariff.pi_zero = number(tariff, "tariff.", "pi_zero", 0.0);
  c.tariff.pi_w = number(tariff, "tariff.", "pi_w");

  c.water_demand = number(root, "", "water_demand", 0.0);
  c.interval_hours = number(root, "", "interval_hours", 1.0);
  return c;
}

inline nlohmann::json config_to_json(const PlantConfig& c) {
  return {
      {"tdp",
       {{"alpha_h", c.tdp.alpha_h},
        {"beta_h", c.tdp.beta_h},
        {"w_min", c.tdp.w_min},
        {"w_max", c.tdp.w_max},
        {"cost_a", c.tdp.cost_a},
        {"cost_b", c.tdp.cost_b},
        {"cost_c", c.tdp.cost_c}}},
      {"rodp",
       {{"alpha_r", c.rodp.alpha_r}, {"w_min", c.rodp.w_min}, {"w_max", c.rodp.w_max}}},
      {"tariff",
       {{"pi_plus", c.tariff.pi_plus},
        {"pi_minus", c.tariff.pi_minus},
        {"pi_zero", c.tariff.pi_zero},
        {"pi_w", c.tariff.pi_w}}},
      {"water_demand", c.water_demand},
      {"interval_hours", c.interval_hours},
  };
}

inline PlantConfig parse_config(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(root);
}

inline PlantConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace wdp::io
