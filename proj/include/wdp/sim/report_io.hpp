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

// File output for simulation reports, sweep tables and perturbation
// decompositions. Numbers are written so they parse back to the same double:
// CSV uses 17 significant digits, JSON uses the shortest round-trip form.

#pragma once

#include <cstdio>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wdp/economics/perturbation.hpp"
#include "wdp/sim/simulate.hpp"

namespace wdp::sim {

inline std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void csv_row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

inline nlohmann::json breakdown_json(const economics::ProfitBreakdown& b) {
  return {{"water_revenue", b.water_revenue},
          {"electricity_payment", b.electricity_payment},
          {"tdp_cost", b.tdp_cost},
          {"profit", b.profit}};
}

}  // namespace detail

inline void write_report_csv(std::ostream& out, const SimulationReport& r) {
  const auto f = full_precision;
  out << "interval_index,g_mwh,w_h,w_r,q_h,q_r,p_h,z,mode,"
         "water_revenue,electricity_payment,tdp_cost,profit\n";
  for (const auto& row : r.intervals) {
    const auto& d = row.dispatch;
    const auto& p = row.profit;
    detail::csv_row(out, {std::to_string(row.index), f(row.g), f(d.w_h), f(d.w_r),
                          f(d.q_h), f(d.q_r), f(d.p_h), f(d.z),
                          std::string(to_string(d.mode)), f(p.water_revenue),
                          f(p.electricity_payment), f(p.tdp_cost), f(p.profit)});
  }
}

inline nlohmann::json report_to_json(const SimulationReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.intervals) {
    const auto& d = row.dispatch;
    nlohmann::json j = {{"interval_index", row.index},
                        {"g_mwh", row.g},
                        {"w_h", d.w_h},
                        {"w_r", d.w_r},
                        {"q_h", d.q_h},
                        {"q_r", d.q_r},
                        {"p_h", d.p_h},
                        {"z", d.z},
                        {"mode", std::string(to_string(d.mode))}};
    j.update(detail::breakdown_json(row.profit));
    rows.push_back(std::move(j));
  }
  const auto& t = r.totals;
  return {{"profile", r.profile_label},
          {"algorithm", r.algorithm},
          {"config_fingerprint", r.config_fingerprint},
          {"intervals", std::move(rows)},
          {"totals",
           {{"water", t.water},
            {"net_exchange", t.net_exchange},
            {"imported", t.imported},
            {"exported", t.exported},
            {"profit", detail::breakdown_json(t.profit)}}}};
}

inline void write_report_json(std::ostream& out, const SimulationReport& r) {
  out << report_to_json(r).dump(2) << '\n';
}

inline void write_sweep_csv(std::ostream& out, Parameter param,
                            const std::vector<SweepRow>& rows) {
  const auto f = full_precision;
  out << to_string(param)
      << ",algorithm,water_revenue,electricity_payment,tdp_cost,profit\n";
  for (const auto& r : rows) {
    detail::csv_row(out, {f(r.value), std::string(to_string(r.algorithm)),
                          f(r.daily.water_revenue), f(r.daily.electricity_payment),
                          f(r.daily.tdp_cost), f(r.daily.profit)});
  }
}

inline nlohmann::json sweep_to_json(Parameter param, const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"parameter", std::string(to_string(param))},
                        {"value", r.value},
                        {"algorithm", std::string(to_string(r.algorithm))}};
    j.update(detail::breakdown_json(r.daily));
    out.push_back(std::move(j));
  }
  return out;
}

inline void write_perturbation_csv(std::ostream& out,
                                   const std::vector<economics::PerturbationResult>& rs) {
  const auto f = full_precision;
  out << "parameter,factor,base_value,perturbed_value,delta_water_revenue,"
         "delta_electricity_revenue,delta_tdp_cost,delta_profit\n";
  for (const auto& r : rs) {
    detail::csv_row(out, {std::string(to_string(r.parameter)), f(r.factor),
                          f(r.base_value), f(r.perturbed_value),
                          f(r.delta_water_revenue()), f(r.delta_electricity_revenue()),
                          f(r.delta_tdp_cost()), f(r.delta_profit())});
  }
}

inline nlohmann::json perturbation_to_json(
    const std::vector<economics::PerturbationResult>& rs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rs) {
    out.push_back({{"parameter", std::string(to_string(r.parameter))},
                   {"factor", r.factor},
                   {"base_value", r.base_value},
                   {"perturbed_value", r.perturbed_value},
                   {"delta_water_revenue", r.delta_water_revenue()},
                   {"delta_electricity_revenue", r.delta_electricity_revenue()},
                   {"delta_tdp_cost", r.delta_tdp_cost()},
                   {"delta_profit", r.delta_profit()}});
  }
  return out;
}

}  // namespace wdp::sim
