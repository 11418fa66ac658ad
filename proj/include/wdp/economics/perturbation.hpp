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

// Splits the change in daily profit caused by scaling one parameter into
// water revenue, electricity revenue and TDP fuel cost. Both runs use the
// optimal policy, re-optimized under their own parameters.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "wdp/economics/accounting.hpp"
#include "wdp/model.hpp"
#include "wdp/sim/simulate.hpp"

namespace wdp::economics {

class PerturbationInfeasible : public std::runtime_error {
 public:
  PerturbationInfeasible(const std::string& what, ValidationError cause)
      : std::runtime_error(what), cause_(std::move(cause)) {}

  const ValidationError& cause() const { return cause_; }

 private:
  ValidationError cause_;
};

struct PerturbationResult {
  sim::Parameter parameter = sim::Parameter::PiPlus;
  double factor = 0.0;
  double base_value = 0.0;
  double perturbed_value = 0.0;
  ProfitBreakdown base;
  ProfitBreakdown perturbed;

  double delta_water_revenue() const {
    return perturbed.water_revenue - base.water_revenue;
  }
  // Electricity revenue is the negated payment, so this is positive when the
  // plant earns more from (or pays less to) the grid.
  double delta_electricity_revenue() const {
    return base.electricity_payment - perturbed.electricity_payment;
  }
  double delta_tdp_cost() const { return perturbed.tdp_cost - base.tdp_cost; }
  double delta_profit() const { return perturbed.profit - base.profit; }
};

// Scales `param` by (1 + factor), e.g. factor = -0.5 halves it.
inline PerturbationResult perturbation_decomposition(
    const PlantConfig& config, const sim::RenewableProfile& profile,
    sim::Parameter param, double factor) {
  PerturbationResult r;
  r.parameter = param;
  r.factor = factor;
  r.base_value = sim::get_parameter(config, param);
  r.perturbed_value = r.base_value * (1.0 + factor);
  const PlantConfig changed = sim::with_parameter(config, param, r.perturbed_value);
  if (auto violations = check_config(changed); !violations.empty()) {
    ValidationError cause(std::move(violations));
    throw PerturbationInfeasible("scaling " + std::string(sim::to_string(param)) +
                                     " by " + std::to_string(1.0 + factor) +
                                     " gives an invalid config: " + cause.what(),
                                 cause);
  }
  r.base = sim::simulate(profile, config, sim::Algorithm::Optimal).totals.profit;
  r.perturbed = sim::simulate(profile, changed, sim::Algorithm::Optimal).totals.profit;
  return r;
}

}  // namespace wdp::economics
