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

// Two simple policies to compare the optimal dispatch against.
//
// max-RODP runs the RO unit flat out and only co-optimizes the TDP with
// renewables. passive-TDP runs the TDP as if it sold power to the grid on its
// own (export setpoint) and lets the RO unit absorb what renewables and TDP
// produce.

#pragma once

#include <algorithm>

#include "wdp/engine.hpp"
#include "wdp/model.hpp"

namespace wdp::benchmarks {

// Breakpoints of the max-RODP policy: import below `gamma_im`, export above
// `gamma_ex`, TDP balancing the RO load in between.
struct MaxRodpThresholds {
  double gamma_im = 0.0;
  double gamma_ex = 0.0;
};

inline MaxRodpThresholds max_rodp_thresholds(const PlantConfig& c,
                                             const engine::ModeSetpoints& s) {
  const double eta = eta_h(c.tdp);
  const double q_r = c.rodp.w_max / c.rodp.alpha_r;
  return {q_r - s.w_h_im / eta, q_r - s.w_h_ex / eta};
}

inline MaxRodpThresholds max_rodp_thresholds(const PlantConfig& c) {
  return max_rodp_thresholds(c, engine::mode_setpoints(c));
}

inline Dispatch max_rodp_dispatch(double g, const PlantConfig& c) {
  engine::require_renewables(g);
  const auto s = engine::mode_setpoints(c);
  const auto th = max_rodp_thresholds(c, s);
  const double w_r = c.rodp.w_max;
  double w_h = s.w_h_ex;
  if (g < th.gamma_im) {
    w_h = s.w_h_im;
  } else if (g <= th.gamma_ex) {
    w_h = std::clamp(eta_h(c.tdp) * (w_r / c.rodp.alpha_r - g), c.tdp.w_min,
                     c.tdp.w_max);
  }
  return make_dispatch(w_h, w_r, g, c);
}

inline Dispatch passive_tdp_dispatch(double g, const PlantConfig& c) {
  engine::require_renewables(g);
  const double w_h = engine::tdp_setpoint(Mode::EX, c);
  const double w_r = std::clamp(c.rodp.alpha_r * (w_h / eta_h(c.tdp) + g),
                                c.rodp.w_min, c.rodp.w_max);
  return make_dispatch(w_h, w_r, g, c);
}

}  // namespace wdp::benchmarks
