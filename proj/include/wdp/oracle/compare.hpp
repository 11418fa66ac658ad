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
#include <cmath>

#include "wdp/economics/accounting.hpp"
#include "wdp/engine.hpp"
#include "wdp/oracle/grid.hpp"
#include "wdp/oracle/regions.hpp"

namespace wdp::oracle {

struct DiscrepancyReport {
  double g = 0.0;
  Dispatch engine;
  Dispatch regions;
  Dispatch grid;
  double engine_profit = 0.0;
  double regions_profit = 0.0;
  double grid_profit = 0.0;
  double grid_epsilon = 0.0;

  // |engine - regions|; both claim to be exact.
  double regions_gap() const { return std::abs(engine_profit - regions_profit); }
  // Positive when the grid found a better point than the engine.
  double grid_excess() const { return grid_profit - engine_profit; }
  double max_profit_gap() const {
    return std::max(regions_gap(), std::abs(engine_profit - grid_profit));
  }
  double w_h_gap() const {
    return std::max(std::abs(engine.w_h - regions.w_h), std::abs(engine.w_h - grid.w_h));
  }
  double w_r_gap() const {
    return std::max(std::abs(engine.w_r - regions.w_r), std::abs(engine.w_r - grid.w_r));
  }

  // Engine agrees with the region solver to `relative`, is never beaten by
  // the grid beyond rounding, and is within the grid's accuracy bound.
  bool ok(double relative = 1e-6) const {
    const double scale = std::max(1.0, std::abs(regions_profit));
    return regions_gap() <= relative * scale &&
           grid_excess() <= relative * scale &&
           -grid_excess() <= grid_epsilon + relative * scale;
  }
};

inline DiscrepancyReport compare(double g, const PlantConfig& c,
                                 GridOptions grid_opts = {}) {
  DiscrepancyReport r;
  r.g = g;
  r.engine = engine::dispatch(g, c);
  r.engine_profit = economics::profit(r.engine, g, c).profit;

  const auto regions = solve_regions(g, c);
  r.regions = regions.best();
  r.regions_profit = regions.best_candidate().profit;

  const auto grid = solve_grid_search(g, c, grid_opts);
  r.grid = grid.dispatch;
  r.grid_profit = grid.profit;
  r.grid_epsilon = grid.epsilon;
  return r;
}

}  // namespace wdp::oracle
