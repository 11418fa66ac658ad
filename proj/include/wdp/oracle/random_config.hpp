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

// Random valid plant configs for property checks. Conversion factors and the
// cost curvature are log-uniform; prices are uniform with pi_plus >= pi_minus
// enforced by sorting; bounds are sorted so w_min <= w_max. The ranges put
// alpha_r * pi_w on both sides of the grid prices, so every tariff regime
// except the measure-zero Degenerate one is drawn regularly.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "wdp/model.hpp"

namespace wdp::oracle {

class RandomConfigGenerator {
 public:
  explicit RandomConfigGenerator(std::uint64_t seed) : rng_(seed) {}

  PlantConfig operator()() {
    PlantConfig c;
    c.tdp.alpha_h = log_uniform(1.0, 10.0);
    c.tdp.beta_h = log_uniform(0.01, 0.2);
    std::tie(c.tdp.w_min, c.tdp.w_max) = sorted_pair(0.0, 5000.0);
    c.tdp.cost_a = log_uniform(1e-3, 1e-1);
    c.tdp.cost_b = uniform(0.0, 5.0);
    c.tdp.cost_c = uniform(0.0, 100.0);

    c.rodp.alpha_r = log_uniform(50.0, 500.0);
    std::tie(c.rodp.w_min, c.rodp.w_max) = sorted_pair(0.0, 10000.0);

    std::tie(c.tariff.pi_minus, c.tariff.pi_plus) = sorted_pair(0.0, 400.0);
    c.tariff.pi_w = log_uniform(0.1, 3.0);
    c.tariff.pi_zero = uniform(0.0, 50.0);
    c.water_demand = 0.0;
    return c;
  }

  // Renewable output spanning every band: up to 20% past the largest net
  // demand the plant can present.
  double renewables(const PlantConfig& c) {
    const double span = c.rodp.w_max / c.rodp.alpha_r + c.tdp.w_max / eta_h(c.tdp);
    return uniform(0.0, 1.2 * span + 1.0);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::pair<double, double> sorted_pair(double lo, double hi) {
    const double a = uniform(lo, hi), b = uniform(lo, hi);
    return {std::min(a, b), std::max(a, b)};
  }

  std::mt19937_64 rng_;
};

}  // namespace wdp::oracle
