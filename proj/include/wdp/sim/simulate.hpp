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

// Per-interval simulation over a renewable profile and parameter sweeps.
// Intervals are independent, so a run is just the dispatch rule applied to
// each g in turn plus the daily sums.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wdp/benchmarks.hpp"
#include "wdp/economics/accounting.hpp"
#include "wdp/engine.hpp"
#include "wdp/model.hpp"
#include "wdp/sim/profile.hpp"

namespace wdp::sim {

enum class Algorithm { Optimal, MaxRodp, PassiveTdp };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Optimal: return "optimal";
    case Algorithm::MaxRodp: return "max-rodp";
    case Algorithm::PassiveTdp: return "passive-tdp";
  }
  return "?";
}

class UnknownAlgorithm : public std::invalid_argument {
 public:
  explicit UnknownAlgorithm(const std::string& name)
      : std::invalid_argument("unknown algorithm '" + name +
                              "' (expected optimal, max-rodp or passive-tdp)") {}
};

inline Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::Optimal, Algorithm::MaxRodp, Algorithm::PassiveTdp}) {
    if (name == to_string(a)) return a;
  }
  throw UnknownAlgorithm(std::string(name));
}

inline std::function<Dispatch(double)> dispatcher(Algorithm a, const PlantConfig& c) {
  switch (a) {
    case Algorithm::Optimal: return engine::ThresholdPolicy(c);
    case Algorithm::MaxRodp:
      return [c](double g) { return benchmarks::max_rodp_dispatch(g, c); };
    case Algorithm::PassiveTdp:
      return [c](double g) { return benchmarks::passive_tdp_dispatch(g, c); };
  }
  throw std::logic_error("unhandled algorithm");
}

// FNV-1a over the exact bit patterns of every config field, as 16 hex digits.
inline std::string config_fingerprint(const PlantConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](double v) {
    unsigned char bytes[sizeof v];
    std::memcpy(bytes, &v, sizeof v);
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  };
  for (double v : {c.tdp.alpha_h, c.tdp.beta_h, c.tdp.w_min, c.tdp.w_max, c.tdp.cost_a,
                   c.tdp.cost_b, c.tdp.cost_c, c.rodp.alpha_r, c.rodp.w_min,
                   c.rodp.w_max, c.tariff.pi_plus, c.tariff.pi_minus, c.tariff.pi_zero,
                   c.tariff.pi_w, c.water_demand, c.interval_hours}) {
    mix(v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct IntervalResult {
  long index = 0;
  double g = 0.0;
  Dispatch dispatch;
  economics::ProfitBreakdown profit;
};

struct SimulationTotals {
  double water = 0.0;         // m³
  double net_exchange = 0.0;  // MWh, sum of z
  double imported = 0.0;      // MWh, sum of max(z, 0)
  double exported = 0.0;      // MWh, sum of max(-z, 0)
  economics::ProfitBreakdown profit;
};

struct SimulationReport {
  std::string profile_label;
  std::string algorithm;
  std::string config_fingerprint;
  std::vector<IntervalResult> intervals;
  SimulationTotals totals;
};

inline SimulationReport simulate(const RenewableProfile& profile,
                                 const PlantConfig& config, Algorithm algorithm) {
  const PlantConfig c = validate_config(config);
  const auto rule = dispatcher(algorithm, c);
  SimulationReport r;
  r.profile_label = profile.label;
  r.algorithm = std::string(to_string(algorithm));
  r.config_fingerprint = config_fingerprint(c);
  r.intervals.reserve(profile.size());
  for (const auto& iv : profile.intervals) {
    IntervalResult row;
    row.index = iv.index;
    row.g = iv.g;
    row.dispatch = rule(iv.g);
    row.profit = economics::profit(row.dispatch, iv.g, c);
    auto& t = r.totals;
    t.water += row.dispatch.w_h + row.dispatch.w_r;
    t.net_exchange += row.dispatch.z;
    t.imported += std::max(row.dispatch.z, 0.0);
    t.exported += std::max(-row.dispatch.z, 0.0);
    t.profit += row.profit;
    r.intervals.push_back(row);
  }
  return r;
}

inline SimulationReport simulate(const RenewableProfile& profile,
                                 const PlantConfig& config,
                                 std::string_view algorithm) {
  return simulate(profile, config, parse_algorithm(algorithm));
}

// ---------------------------------------------------------------------------
// Parameters that sweeps and perturbations act on.

enum class Parameter { PiPlus, PiMinus, PiW, AlphaR, AlphaH, BetaH };

inline constexpr Parameter kAllParameters[] = {
    Parameter::PiPlus, Parameter::PiMinus, Parameter::PiW,
    Parameter::AlphaR, Parameter::AlphaH,  Parameter::BetaH};

inline std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::PiPlus: return "pi_plus";
    case Parameter::PiMinus: return "pi_minus";
    case Parameter::PiW: return "pi_w";
    case Parameter::AlphaR: return "alpha_r";
    case Parameter::AlphaH: return "alpha_h";
    case Parameter::BetaH: return "beta_h";
  }
  return "?";
}

inline Parameter parse_parameter(std::string_view name) {
  for (auto p : kAllParameters) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument(
      "unknown parameter '" + std::string(name) +
      "' (expected pi_plus, pi_minus, pi_w, alpha_r, alpha_h or beta_h)");
}

inline double& parameter_ref(PlantConfig& c, Parameter p) {
  switch (p) {
    case Parameter::PiPlus: return c.tariff.pi_plus;
    case Parameter::PiMinus: return c.tariff.pi_minus;
    case Parameter::PiW: return c.tariff.pi_w;
    case Parameter::AlphaR: return c.rodp.alpha_r;
    case Parameter::AlphaH: return c.tdp.alpha_h;
    case Parameter::BetaH: return c.tdp.beta_h;
  }
  throw std::logic_error("unhandled parameter");
}

inline double get_parameter(PlantConfig c, Parameter p) {
  return parameter_ref(c, p);
}

inline PlantConfig with_parameter(PlantConfig c, Parameter p, double value) {
  parameter_ref(c, p) = value;
  return c;
}

struct SweepSpec {
  Parameter parameter = Parameter::PiPlus;
  std::vector<double> values;
  std::vector<Algorithm> algorithms{Algorithm::Optimal};
};

struct SweepRow {
  double value = 0.0;
  Algorithm algorithm = Algorithm::Optimal;
  economics::ProfitBreakdown daily;
};

// Rows are ordered by value, then by the order of spec.algorithms. A grid
// value that breaks the config throws ValidationError.
inline std::vector<SweepRow> sweep(const SweepSpec& spec, const RenewableProfile& profile,
                                   const PlantConfig& config) {
  if (spec.values.empty()) throw std::invalid_argument("sweep grid is empty");
  if (spec.algorithms.empty()) throw std::invalid_argument("sweep has no algorithms");
  std::vector<SweepRow> rows;
  for (double v : spec.values) {
    const PlantConfig c = with_parameter(config, spec.parameter, v);
    for (auto a : spec.algorithms) {
      rows.push_back({v, a, simulate(profile, c, a).totals.profit});
    }
  }
  return rows;
}

}  // namespace wdp::sim
