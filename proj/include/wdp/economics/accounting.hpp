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

#pragma once

#include <algorithm>

#include "wdp/model.hpp"

namespace wdp::economics {

// profit == water_revenue - electricity_payment - tdp_cost, exactly.
struct ProfitBreakdown {
  double water_revenue = 0.0;
  double electricity_payment = 0.0;  // positive = paid to the utility
  double tdp_cost = 0.0;
  double profit = 0.0;

  ProfitBreakdown& operator+=(const ProfitBreakdown& o) {
    water_revenue += o.water_revenue;
    electricity_payment += o.electricity_payment;
    tdp_cost += o.tdp_cost;
    profit += o.profit;
    return *this;
  }

  friend bool operator==(const ProfitBreakdown&, const ProfitBreakdown&) = default;
};

inline double water_revenue(double w_h, double w_r, const Tariff& t) {
  return t.pi_w * (w_h + w_r);
}

inline double electricity_payment(double z, const Tariff& t) {
  return t.pi_plus * std::max(0.0, z) - t.pi_minus * std::max(0.0, -z) +
         t.pi_zero;
}

inline double tdp_cost(double p_h, const TdpParams& tdp) {
  return (tdp.cost_a * p_h + tdp.cost_b) * p_h + tdp.cost_c;
}

inline ProfitBreakdown make_breakdown(double water, double payment,
                                      double cost) {
  return {water, payment, cost, water - payment - cost};
}

// `g` is carried in dispatch.z already; it is accepted so call sites read
// like the objective they evaluate.
inline ProfitBreakdown profit(const Dispatch& d, [[maybe_unused]] double g,
                              const PlantConfig& c) {
  return make_breakdown(water_revenue(d.w_h, d.w_r, c.tariff),
                        electricity_payment(d.z, c.tariff),
                        tdp_cost(d.p_h, c.tdp));
}

// Objective evaluated at an arbitrary (w_h, w_r) without net-zero snapping.
inline double profit_at(double w_h, double w_r, double g, const PlantConfig& c) {
  const double z = w_r / c.rodp.alpha_r - w_h / eta_h(c.tdp) - g;
  return water_revenue(w_h, w_r, c.tariff) - electricity_payment(z, c.tariff) -
         tdp_cost(w_h / c.tdp.alpha_h, c.tdp);
}

}  // namespace wdp::economics
