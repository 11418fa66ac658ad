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

// Sensitivity of the optimal profit to renewables and prices.
//
// Prices enter the profit linearly for a fixed dispatch, so by the envelope
// theorem the derivative of the optimal profit is the partial derivative at
// the optimum:
//
//   d/d pi_plus  = -max(z, 0)      (never positive)
//   d/d pi_minus = +max(-z, 0)     (never negative)
//   d/d pi_w     = w_h + w_r
//
// The derivative in g is the marginal value of electricity at the optimum:
// pi_plus while importing, pi_minus while exporting, and the power-balance
// multiplier while net zero. Every analytic value is paired with a
// finite difference of the fully re-optimized profit.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <utility>

#include "wdp/economics/accounting.hpp"
#include "wdp/engine.hpp"
#include "wdp/model.hpp"

namespace wdp::economics {

inline double optimal_profit(double g, const PlantConfig& c) {
  return profit(engine::dispatch(g, c), g, c).profit;
}

// Slope of the optimal profit in g. A single value inside a band where it is
// constant; on the transition bands it moves continuously between the two
// neighbouring rates, and the closed hull of those rates is returned.
struct SlopeInterval {
  double lower = 0.0;
  double upper = 0.0;

  bool is_point() const { return lower == upper; }
  bool contains(double x, double tol = 0.0) const {
    return x >= lower - tol && x <= upper + tol;
  }
};

inline SlopeInterval hull(double a, double b) {
  return {std::min(a, b), std::max(a, b)};
}

inline SlopeInterval profit_slope(double g, const PlantConfig& c) {
  engine::require_renewables(g);
  const Thresholds th = engine::compute_thresholds(c);
  const Tariff& t = c.tariff;
  const double rodp_value = c.rodp.alpha_r * t.pi_w;
  if (g < th.gamma_im) return {t.pi_plus, t.pi_plus};
  if (g > th.gamma_ex) return {t.pi_minus, t.pi_minus};
  if (th.tariff_regime != TariffRegime::Interior) return hull(t.pi_plus, t.pi_minus);
  if (g < th.gamma_nz1) return hull(t.pi_plus, rodp_value);
  if (g <= th.gamma_nz2) return {rodp_value, rodp_value};
  return hull(rodp_value, t.pi_minus);
}

namespace detail {

inline bool strictly_inside(double v, double lo, double hi) {
  const double tol = 1e-9 * std::max({1.0, std::abs(lo), std::abs(hi)});
  return v > lo + tol && v < hi - tol;
}

}  // namespace detail

// Marginal value of renewables at an optimal dispatch. Empty when both
// plants sit on a bound during net zero: the profit has a kink there.
inline std::optional<double> marginal_renewable_value(const Dispatch& d,
                                                      const PlantConfig& c) {
  if (d.mode == Mode::IM) return c.tariff.pi_plus;
  if (d.mode == Mode::EX) return c.tariff.pi_minus;
  if (detail::strictly_inside(d.w_r, c.rodp.w_min, c.rodp.w_max)) {
    return c.rodp.alpha_r * c.tariff.pi_w;
  }
  if (detail::strictly_inside(d.w_h, c.tdp.w_min, c.tdp.w_max)) {
    const double marginal_cost = 2.0 * c.tdp.cost_a * d.p_h + c.tdp.cost_b;
    return eta_h(c.tdp) * (marginal_cost / c.tdp.alpha_h - c.tariff.pi_w);
  }
  return std::nullopt;
}

struct DerivativeCheck {
  double analytic = std::numeric_limits<double>::quiet_NaN();
  double central = std::numeric_limits<double>::quiet_NaN();
  double forward = std::numeric_limits<double>::quiet_NaN();
  double backward = std::numeric_limits<double>::quiet_NaN();
  double step = 0.0;
  bool at_kink = false;    // one-sided differences disagree
  bool one_sided = false;  // only one side of the point is admissible
  bool agrees = true;      // analytic matches the finite difference

  // The finite difference to compare against: central when both sides
  // exist, otherwise whichever side does.
  double finite_difference() const {
    if (!std::isnan(central)) return central;
    return std::isnan(forward) ? backward : forward;
  }
};

struct SensitivityReport {
  double g = 0.0;
  Dispatch dispatch;
  double profit = 0.0;
  DerivativeCheck pi_plus;
  DerivativeCheck pi_minus;
  DerivativeCheck pi_w;
  DerivativeCheck renewables;

  bool at_kink() const {
    return pi_plus.at_kink || pi_minus.at_kink || pi_w.at_kink || renewables.at_kink;
  }
  // True when every derivative away from a kink matches its finite
  // difference.
  bool consistent() const {
    for (const auto* d : {&pi_plus, &pi_minus, &pi_w, &renewables}) {
      if (!d->at_kink && !d->agrees) return false;
    }
    return true;
  }
};

struct SensitivityOptions {
  double relative_step = 1e-4;
  double relative_tolerance = 1e-3;
  double absolute_tolerance = 1e-6;
};

namespace detail {

inline bool close(double a, double b, const SensitivityOptions& o) {
  return std::abs(a - b) <=
         o.relative_tolerance * std::max(std::abs(a), std::abs(b)) +
             o.absolute_tolerance;
}

// `value(x)` returns nullopt where x is inadmissible.
inline DerivativeCheck differentiate(
    double x, double analytic,
    const std::function<std::optional<double>(double)>& value,
    const SensitivityOptions& o) {
  DerivativeCheck d;
  d.analytic = analytic;
  d.step = o.relative_step * std::max(std::abs(x), 1.0);
  const auto mid = value(x);
  const auto up = value(x + d.step);
  const auto down = value(x - d.step);
  if (mid && up) d.forward = (*up - *mid) / d.step;
  if (mid && down) d.backward = (*mid - *down) / d.step;
  if (up && down) {
    d.central = (*up - *down) / (2.0 * d.step);
    d.at_kink = !close(d.forward, d.backward, o);
  } else {
    d.one_sided = true;
  }
  const double fd = d.finite_difference();
  d.agrees = !std::isnan(analytic) && !std::isnan(fd) && close(analytic, fd, o);
  return d;
}

}  // namespace detail

inline SensitivityReport envelope_sensitivities(double g, const PlantConfig& c,
                                                SensitivityOptions opts = {}) {
  engine::require_renewables(g);
  SensitivityReport r;
  r.g = g;
  r.dispatch = engine::dispatch(g, c);
  r.profit = profit(r.dispatch, g, c).profit;

  auto reoptimized = [&](auto mutate) {
    return [&c, g, mutate](double x) -> std::optional<double> {
      PlantConfig p = c;
      double at_g = g;
      mutate(p, at_g, x);
      if (!check_config(p).empty() || at_g < 0.0) return std::nullopt;
      return optimal_profit(at_g, p);
    };
  };

  const double z = r.dispatch.z;
  r.pi_plus = detail::differentiate(
      c.tariff.pi_plus, -std::max(z, 0.0),
      reoptimized([](PlantConfig& p, double&, double x) { p.tariff.pi_plus = x; }), opts);
  r.pi_minus = detail::differentiate(
      c.tariff.pi_minus, std::max(-z, 0.0),
      reoptimized([](PlantConfig& p, double&, double x) { p.tariff.pi_minus = x; }), opts);
  r.pi_w = detail::differentiate(
      c.tariff.pi_w, r.dispatch.w_h + r.dispatch.w_r,
      reoptimized([](PlantConfig& p, double&, double x) { p.tariff.pi_w = x; }), opts);
  r.renewables = detail::differentiate(
      g,
      marginal_renewable_value(r.dispatch, c).value_or(
          std::numeric_limits<double>::quiet_NaN()),
      reoptimized([](PlantConfig&, double& at_g, double x) { at_g = x; }), opts);
  return r;
}

}  // namespace wdp::economics
