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

// Closed-form threshold dispatch.
//
// The optimal setpoints depend on the renewable output g only through a
// comparison against four breakpoints that are computed once per config:
//
//   g < gamma_im               import;  TDP at its import setpoint, RO at min
//   [gamma_im, gamma_nz1)      net zero; TDP follows g, RO at min
//   [gamma_nz1, gamma_nz2]     net zero; TDP at its NZ setpoint, RO follows g
//   (gamma_nz2, gamma_ex]      net zero; TDP follows g, RO at max
//   g > gamma_ex               export;  TDP at its export setpoint, RO at max
//
// When the RO water value alpha_r * pi_w lies outside [pi_minus, pi_plus] the
// RO unit is pinned to one bound and only two breakpoints remain.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wdp/economics/accounting.hpp"
#include "wdp/model.hpp"
#include "wdp/oracle/regions.hpp"

namespace wdp::engine {

// TDP water setpoints and the electricity value (δ) behind each (m³, $/MWh).
struct ModeSetpoints {
  double w_h_im = 0.0;
  double w_h_nz = 0.0;
  double w_h_ex = 0.0;
  double delta_im = 0.0;
  double delta_nz = 0.0;
  double delta_ex = 0.0;
};

// Inverse of the marginal fuel cost: the fuel level (MBTU) where
// 2 a p + b == y, floored at zero fuel.
inline double marginal_cost_inverse(double y, const TdpParams& tdp) {
  return std::max(0.0, (y - tdp.cost_b) / (2.0 * tdp.cost_a));
}

// TDP water output that balances marginal fuel cost against the value of its
// water plus its electricity priced at `delta`, clipped to the unit's range.
inline double tdp_setpoint(double delta, const TdpParams& tdp, const Tariff& t) {
  const double fuel =
      marginal_cost_inverse(tdp.alpha_h * t.pi_w + tdp.beta_h * delta, tdp);
  return std::clamp(tdp.alpha_h * fuel, tdp.w_min, tdp.w_max);
}

inline double electricity_value(Mode sigma, const PlantConfig& c) {
  switch (sigma) {
    case Mode::IM: return c.tariff.pi_plus;
    case Mode::NZ: return c.rodp.alpha_r * c.tariff.pi_w;
    case Mode::EX: return c.tariff.pi_minus;
  }
  return 0.0;
}

inline double tdp_setpoint(Mode sigma, const PlantConfig& c) {
  return tdp_setpoint(electricity_value(sigma, c), c.tdp, c.tariff);
}

inline ModeSetpoints mode_setpoints(const PlantConfig& c) {
  ModeSetpoints s;
  s.delta_im = electricity_value(Mode::IM, c);
  s.delta_nz = electricity_value(Mode::NZ, c);
  s.delta_ex = electricity_value(Mode::EX, c);
  s.w_h_im = tdp_setpoint(s.delta_im, c.tdp, c.tariff);
  s.w_h_nz = tdp_setpoint(s.delta_nz, c.tdp, c.tariff);
  s.w_h_ex = tdp_setpoint(s.delta_ex, c.tdp, c.tariff);
  return s;
}

// Exact equality with either grid price counts as Interior.
inline TariffRegime classify_regime(const Tariff& t, const RodpParams& rodp) {
  const double value = rodp.alpha_r * t.pi_w;
  if (value >= t.pi_minus && value <= t.pi_plus) return TariffRegime::Interior;
  if (t.pi_plus == t.pi_minus) return TariffRegime::Degenerate;
  return value > t.pi_plus ? TariffRegime::RodpMax : TariffRegime::RodpMin;
}

inline TariffRegime classify_regime(const PlantConfig& c) {
  return classify_regime(c.tariff, c.rodp);
}

// RO output outside the Interior regime, where it does not depend on g.
inline double pinned_rodp_output(const PlantConfig& c, TariffRegime regime) {
  switch (regime) {
    case TariffRegime::RodpMax: return c.rodp.w_max;
    case TariffRegime::RodpMin: return c.rodp.w_min;
    case TariffRegime::Degenerate:
      return c.rodp.alpha_r * c.tariff.pi_w > c.tariff.pi_plus ? c.rodp.w_max
                                                              : c.rodp.w_min;
    case TariffRegime::Interior: break;
  }
  throw std::logic_error("RO output is not pinned in the Interior regime");
}

inline Thresholds compute_thresholds(const PlantConfig& c,
                                     const ModeSetpoints& s) {
  const double eta = eta_h(c.tdp);
  Thresholds th;
  th.tariff_regime = classify_regime(c);
  if (th.tariff_regime == TariffRegime::Interior) {
    const double lo = c.rodp.w_min / c.rodp.alpha_r;
    const double hi = c.rodp.w_max / c.rodp.alpha_r;
    th.gamma_im = lo - s.w_h_im / eta;
    th.gamma_nz1 = lo - s.w_h_nz / eta;
    th.gamma_nz2 = hi - s.w_h_nz / eta;
    th.gamma_ex = hi - s.w_h_ex / eta;
  } else {
    const double q_r = pinned_rodp_output(c, th.tariff_regime) / c.rodp.alpha_r;
    th.gamma_im = th.gamma_nz1 = q_r - s.w_h_im / eta;
    th.gamma_ex = th.gamma_nz2 = q_r - s.w_h_ex / eta;
  }
  return th;
}

inline Thresholds compute_thresholds(const PlantConfig& c) {
  return compute_thresholds(c, mode_setpoints(c));
}

// Sign of the optimal net exchange: +1 import, 0 net zero, -1 export. The
// band edges are widened by the net-zero tolerance so the result agrees with
// the snapped z of dispatch().
inline int grid_mode(double g, const Thresholds& th) {
  if (g < th.gamma_im - kNetZeroTolerance) return 1;
  if (g > th.gamma_ex + kNetZeroTolerance) return -1;
  return 0;
}

inline void require_renewables(double g) {
  if (!(g >= 0.0) || !std::isfinite(g)) {
    throw std::domain_error("renewable output g must be finite and >= 0");
  }
}

// Precomputed policy for one config; evaluating it is a handful of
// comparisons.
class ThresholdPolicy {
 public:
  explicit ThresholdPolicy(const PlantConfig& config)
      : config_(config),
        setpoints_(mode_setpoints(config)),
        thresholds_(compute_thresholds(config, setpoints_)) {
    if (thresholds_.tariff_regime != TariffRegime::Interior) {
      pinned_w_r_ = pinned_rodp_output(config_, thresholds_.tariff_regime);
    }
  }

  const PlantConfig& config() const { return config_; }
  const ModeSetpoints& setpoints() const { return setpoints_; }
  const Thresholds& thresholds() const { return thresholds_; }

  Dispatch operator()(double g) const {
    require_renewables(g);
    const auto [w_h, w_r] = thresholds_.tariff_regime == TariffRegime::Interior
                                ? interior_setpoints(g)
                                : pinned_setpoints(g);
    const double eta = eta_h(config_.tdp);
    const double z_raw = w_r / config_.rodp.alpha_r - w_h / eta - g;
    const bool nz_band = g >= thresholds_.gamma_im && g <= thresholds_.gamma_ex;
    if (nz_band && std::abs(z_raw) > kNetZeroTolerance) {
      // Both plants' bounds conflict with power balance; settle it by
      // comparing the region candidates directly.
      return oracle::solve_regions(g, config_).best();
    }
    return make_dispatch(w_h, w_r, g, config_);
  }

 private:
  struct Setpoints {
    double w_h;
    double w_r;
  };

  double clip_tdp(double w) const {
    return std::clamp(w, config_.tdp.w_min, config_.tdp.w_max);
  }

  // TDP output that balances RO demand q_r against renewables g.
  double balancing_tdp(double q_r, double g) const {
    return clip_tdp(eta_h(config_.tdp) * (q_r - g));
  }

  Setpoints interior_setpoints(double g) const {
    const auto& r = config_.rodp;
    const auto& th = thresholds_;
    const auto& s = setpoints_;
    if (g < th.gamma_im) return {s.w_h_im, r.w_min};
    if (g < th.gamma_nz1) return {balancing_tdp(r.w_min / r.alpha_r, g), r.w_min};
    if (g <= th.gamma_nz2) {
      const double w_r = r.alpha_r * (s.w_h_nz / eta_h(config_.tdp) + g);
      return {s.w_h_nz, std::clamp(w_r, r.w_min, r.w_max)};
    }
    if (g <= th.gamma_ex) return {balancing_tdp(r.w_max / r.alpha_r, g), r.w_max};
    return {s.w_h_ex, r.w_max};
  }

  Setpoints pinned_setpoints(double g) const {
    const auto& th = thresholds_;
    if (g < th.gamma_im) return {setpoints_.w_h_im, pinned_w_r_};
    if (g <= th.gamma_ex) {
      return {balancing_tdp(pinned_w_r_ / config_.rodp.alpha_r, g), pinned_w_r_};
    }
    return {setpoints_.w_h_ex, pinned_w_r_};
  }

  PlantConfig config_;
  ModeSetpoints setpoints_;
  Thresholds thresholds_;
  double pinned_w_r_ = 0.0;
};

inline Dispatch dispatch(double g, const PlantConfig& c) {
  return ThresholdPolicy(c)(g);
}

// Plant with only an RO unit: it soaks up renewables between its bounds and
// trades the remainder with the grid.
inline Dispatch dispatch_rodp_only(double g, const RodpParams& rodp,
                                   const Tariff& t) {
  require_renewables(g);
  double w_r = 0.0;
  switch (classify_regime(t, rodp)) {
    case TariffRegime::Interior:
      w_r = std::clamp(rodp.alpha_r * g, rodp.w_min, rodp.w_max);
      break;
    case TariffRegime::RodpMax: w_r = rodp.w_max; break;
    case TariffRegime::RodpMin: w_r = rodp.w_min; break;
    case TariffRegime::Degenerate:
      w_r = rodp.alpha_r * t.pi_w > t.pi_plus ? rodp.w_max : rodp.w_min;
      break;
  }
  Dispatch d;
  d.w_r = w_r;
  d.q_r = w_r / rodp.alpha_r;
  d.z = d.q_r - g;
  if (std::abs(d.z) <= kNetZeroTolerance) d.z = 0.0;
  d.mode = d.z > 0.0 ? Mode::IM : (d.z < 0.0 ? Mode::EX : Mode::NZ);
  return d;
}

// Plant with only a TDP: always a net exporter, so its electricity is valued
// at pi_minus and the setpoint does not depend on g.
inline Dispatch dispatch_tdp_only(const TdpParams& tdp, const Tariff& t,
                                  double g = 0.0) {
  require_renewables(g);
  Dispatch d;
  d.w_h = tdp_setpoint(t.pi_minus, tdp, t);
  d.q_h = d.w_h / eta_h(tdp);
  d.p_h = d.w_h / tdp.alpha_h;
  d.z = -d.q_h - g;
  if (std::abs(d.z) <= kNetZeroTolerance) d.z = 0.0;
  d.mode = d.z < 0.0 ? Mode::EX : Mode::NZ;
  return d;
}

}  // namespace wdp::engine
