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

// Brute-force search over the (w_h, w_r) box. Every grid point is feasible,
// so the result never beats the true optimum; the coarse pass lands within
// grid_accuracy() of it and the refinement passes only improve on that.

#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "wdp/economics/accounting.hpp"
#include "wdp/model.hpp"

namespace wdp::oracle {

struct GridOptions {
  int resolution = 1000;  // intervals per axis, >= 100
  int refinements = 3;    // each shrinks the window 10x around the incumbent
};

struct GridResult {
  Dispatch dispatch;
  double profit = 0.0;
  double epsilon = 0.0;  // a-priori bound on (optimum - profit)
  long evaluations = 0;
};

// Lipschitz bound of the profit times half the coarse step on each axis.
inline double grid_accuracy(const PlantConfig& c, int resolution) {
  const double eta = eta_h(c.tdp);
  const double p_max = c.tdp.w_max / c.tdp.alpha_h;
  const double lip_h = c.tariff.pi_w + c.tariff.pi_plus / eta +
                       (2.0 * c.tdp.cost_a * p_max + c.tdp.cost_b) / c.tdp.alpha_h;
  const double lip_r = c.tariff.pi_w + c.tariff.pi_plus / c.rodp.alpha_r;
  const double step_h = (c.tdp.w_max - c.tdp.w_min) / resolution;
  const double step_r = (c.rodp.w_max - c.rodp.w_min) / resolution;
  return 0.5 * (lip_h * step_h + lip_r * step_r);
}

inline GridResult solve_grid_search(double g, const PlantConfig& c,
                                    GridOptions opts = {}) {
  if (opts.resolution < 100) {
    throw std::invalid_argument("grid resolution must be >= 100 per axis");
  }
  if (!(g >= 0.0)) throw std::domain_error("renewable output g must be >= 0");

  const double eta = eta_h(c.tdp);
  const int n = opts.resolution;

  // Lexicographic (profit, w_h, w_r) so the answer never depends on visit
  // order.
  std::tuple<double, double, double> best{-std::numeric_limits<double>::infinity(),
                                          0.0, 0.0};
  long evaluations = 0;

  auto scan = [&](double h_lo, double h_hi, double r_lo, double r_hi) {
    const double dh = (h_hi - h_lo) / n;
    const double dr = (r_hi - r_lo) / n;
    for (int i = 0; i <= n; ++i) {
      const double w_h = i == n ? h_hi : h_lo + i * dh;
      const double p = w_h / c.tdp.alpha_h;
      const double fixed = c.tariff.pi_w * w_h - economics::tdp_cost(p, c.tdp);
      const double q_h = w_h / eta;
      for (int j = 0; j <= n; ++j) {
        const double w_r = j == n ? r_hi : r_lo + j * dr;
        const double z = w_r / c.rodp.alpha_r - q_h - g;
        const double value = fixed + c.tariff.pi_w * w_r -
                             economics::electricity_payment(z, c.tariff);
        const std::tuple<double, double, double> cand{value, w_h, w_r};
        if (cand > best) best = cand;
      }
      evaluations += n + 1;
    }
  };

  double h_lo = c.tdp.w_min, h_hi = c.tdp.w_max;
  double r_lo = c.rodp.w_min, r_hi = c.rodp.w_max;
  scan(h_lo, h_hi, r_lo, r_hi);
  double half_h = (h_hi - h_lo) / 2.0, half_r = (r_hi - r_lo) / 2.0;
  for (int round = 0; round < opts.refinements; ++round) {
    half_h /= 10.0;
    half_r /= 10.0;
    const auto [value, w_h, w_r] = best;
    scan(std::max(c.tdp.w_min, w_h - half_h), std::min(c.tdp.w_max, w_h + half_h),
         std::max(c.rodp.w_min, w_r - half_r), std::min(c.rodp.w_max, w_r + half_r));
  }

  GridResult result;
  const auto [value, w_h, w_r] = best;
  result.dispatch = make_dispatch(w_h, w_r, g, c);
  result.profit = value;
  result.epsilon = grid_accuracy(c, n);
  result.evaluations = evaluations;
  return result;
}

inline Dispatch solve_grid(double g, const PlantConfig& c, GridOptions opts = {}) {
  return solve_grid_search(g, c, opts).dispatch;
}

}  // namespace wdp::oracle
