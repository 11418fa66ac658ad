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

// Domain types for a hybrid desalination plant: a thermal unit (TDP) that
// burns fuel and co-produces water and electricity, a reverse-osmosis unit
// (RODP) that turns electricity into water, colocated renewables, and a
// net-metered grid connection.
//
// Unit convention: every per-interval quantity is an energy or a volume over
// one dispatch interval (MWh, m³, MBTU). With the default one-hour interval
// MW and MWh coincide numerically.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wdp {

// |z| at or below this (MWh) is reported as exactly zero net exchange.
inline constexpr double kNetZeroTolerance = 1e-6;

struct TdpParams {
  double alpha_h = 0.0;  // fuel-to-water conversion (m³/MBTU)
  double beta_h = 0.0;   // fuel-to-electricity conversion (MWh/MBTU)
  double w_min = 0.0;    // m³ per interval
  double w_max = 0.0;    // m³ per interval
  double cost_a = 0.0;   // $/MBTU²
  double cost_b = 0.0;   // $/MBTU
  double cost_c = 0.0;   // $

  friend bool operator==(const TdpParams&, const TdpParams&) = default;
};

struct RodpParams {
  double alpha_r = 0.0;  // electricity-to-water conversion (m³/MWh)
  double w_min = 0.0;
  double w_max = 0.0;

  friend bool operator==(const RodpParams&, const RodpParams&) = default;
};

// Net energy metering tariff plus the water selling price.
struct Tariff {
  double pi_plus = 0.0;   // import price ($/MWh)
  double pi_minus = 0.0;  // export price ($/MWh)
  double pi_zero = 0.0;   // fixed charge ($/interval)
  double pi_w = 0.0;      // water price ($/m³)

  friend bool operator==(const Tariff&, const Tariff&) = default;
};

struct PlantConfig {
  TdpParams tdp;
  RodpParams rodp;
  Tariff tariff;
  double water_demand = 0.0;  // m³ per interval
  double interval_hours = 1.0;

  friend bool operator==(const PlantConfig&, const PlantConfig&) = default;
};

enum class Mode { IM, NZ, EX };

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::IM: return "IM";
    case Mode::NZ: return "NZ";
    case Mode::EX: return "EX";
  }
  return "?";
}

// Sign convention: z > 0 is a net import from the grid.
struct Dispatch {
  double w_h = 0.0;  // m³
  double w_r = 0.0;  // m³
  double q_h = 0.0;  // MWh produced by the TDP
  double q_r = 0.0;  // MWh consumed by the RODP
  double p_h = 0.0;  // MBTU
  double z = 0.0;    // MWh
  Mode mode = Mode::NZ;

  friend bool operator==(const Dispatch&, const Dispatch&) = default;
};

// Where the effective RODP water value alpha_r * pi_w sits relative to the
// grid prices.
enum class TariffRegime {
  Interior,    // alpha_r * pi_w in [pi_minus, pi_plus]
  RodpMax,     // alpha_r * pi_w > pi_plus
  RodpMin,     // alpha_r * pi_w < pi_minus
  Degenerate,  // pi_plus == pi_minus and the water value is off that price
};

inline std::string_view to_string(TariffRegime r) {
  switch (r) {
    case TariffRegime::Interior: return "Interior";
    case TariffRegime::RodpMax: return "RodpMax";
    case TariffRegime::RodpMin: return "RodpMin";
    case TariffRegime::Degenerate: return "Degenerate";
  }
  return "?";
}

// Renewable-output breakpoints (MWh). Outside the Interior regime the
// policy has two thresholds and gamma_nz1 == gamma_im, gamma_nz2 == gamma_ex.
struct Thresholds {
  double gamma_im = 0.0;
  double gamma_nz1 = 0.0;
  double gamma_nz2 = 0.0;
  double gamma_ex = 0.0;
  TariffRegime tariff_regime = TariffRegime::Interior;

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  SizingViolation,
  TariffViolation,
  NonConvexCost,
  NegativeParameter,
  NonFiniteParameter,
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::SizingViolation: return "SizingViolation";
    case ViolationKind::TariffViolation: return "TariffViolation";
    case ViolationKind::NonConvexCost: return "NonConvexCost";
    case ViolationKind::NegativeParameter: return "NegativeParameter";
    case ViolationKind::NonFiniteParameter: return "NonFiniteParameter";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string field;
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : std::runtime_error(describe(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

  bool has(ViolationKind kind) const {
    for (const auto& v : violations_) {
      if (v.kind == kind) return true;
    }
    return false;
  }

 private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::string out = "invalid plant config:";
    for (const auto& v : vs) {
      out += "\n  ";
      out += to_string(v.kind);
      out += " (" + v.field + "): " + v.message;
    }
    return out;
  }

  std::vector<Violation> violations_;
};

// Returns every violated invariant; empty means valid.
inline std::vector<Violation> check_config(const PlantConfig& c) {
  std::vector<Violation> out;
  auto finite = [&](double v, const char* field) {
    if (!std::isfinite(v)) {
      out.push_back({ViolationKind::NonFiniteParameter, field, "must be finite"});
      return false;
    }
    return true;
  };
  auto positive = [&](double v, const char* field) {
    if (finite(v, field) && v <= 0.0) {
      out.push_back({ViolationKind::NegativeParameter, field, "must be > 0"});
    }
  };
  auto non_negative = [&](double v, const char* field) {
    if (finite(v, field) && v < 0.0) {
      out.push_back({ViolationKind::NegativeParameter, field, "must be >= 0"});
    }
  };
  auto ordered = [&](double lo, double hi, const char* field) {
    if (std::isfinite(lo) && std::isfinite(hi) && lo > hi) {
      out.push_back({ViolationKind::NegativeParameter, field,
                     "w_min must not exceed w_max"});
    }
  };

  positive(c.tdp.alpha_h, "tdp.alpha_h");
  positive(c.tdp.beta_h, "tdp.beta_h");
  non_negative(c.tdp.w_min, "tdp.w_min");
  non_negative(c.tdp.w_max, "tdp.w_max");
  ordered(c.tdp.w_min, c.tdp.w_max, "tdp.w_max");
  if (finite(c.tdp.cost_a, "tdp.cost_a") && c.tdp.cost_a <= 0.0) {
    out.push_back({ViolationKind::NonConvexCost, "tdp.cost_a",
                   "quadratic fuel-cost coefficient must be > 0"});
  }
  non_negative(c.tdp.cost_b, "tdp.cost_b");
  finite(c.tdp.cost_c, "tdp.cost_c");

  positive(c.rodp.alpha_r, "rodp.alpha_r");
  non_negative(c.rodp.w_min, "rodp.w_min");
  non_negative(c.rodp.w_max, "rodp.w_max");
  ordered(c.rodp.w_min, c.rodp.w_max, "rodp.w_max");

  non_negative(c.tariff.pi_plus, "tariff.pi_plus");
  non_negative(c.tariff.pi_minus, "tariff.pi_minus");
  finite(c.tariff.pi_zero, "tariff.pi_zero");
  non_negative(c.tariff.pi_w, "tariff.pi_w");
  if (std::isfinite(c.tariff.pi_plus) && std::isfinite(c.tariff.pi_minus) &&
      c.tariff.pi_plus < c.tariff.pi_minus) {
    out.push_back({ViolationKind::TariffViolation, "tariff.pi_minus",
                   "import price must be >= export price"});
  }

  non_negative(c.water_demand, "water_demand");
  positive(c.interval_hours, "interval_hours");
  if (std::isfinite(c.tdp.w_min) && std::isfinite(c.rodp.w_min) &&
      std::isfinite(c.water_demand) &&
      c.tdp.w_min + c.rodp.w_min < c.water_demand) {
    out.push_back({ViolationKind::SizingViolation, "water_demand",
                   "minimum plant output tdp.w_min + rodp.w_min is below the "
                   "water demand"});
  }
  return out;
}

// Throws ValidationError listing every violated invariant.
inline PlantConfig validate_config(const PlantConfig& raw) {
  auto violations = check_config(raw);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return raw;
}

// Water-to-electricity production ratio of the TDP (m³/MWh). Always derived,
// never stored.
inline double eta_h(const TdpParams& tdp) { return tdp.alpha_h / tdp.beta_h; }

// Fills the derived fields of a dispatch from the two water setpoints.
inline Dispatch make_dispatch(double w_h, double w_r, double g,
                              const PlantConfig& c) {
  Dispatch d;
  d.w_h = w_h;
  d.w_r = w_r;
  d.q_h = w_h / eta_h(c.tdp);
  d.q_r = w_r / c.rodp.alpha_r;
  d.p_h = w_h / c.tdp.alpha_h;
  d.z = d.q_r - d.q_h - g;
  if (std::abs(d.z) <= kNetZeroTolerance) d.z = 0.0;
  d.mode = d.z > 0.0 ? Mode::IM : (d.z < 0.0 ? Mode::EX : Mode::NZ);
  return d;
}

// The standard case study: NEM tariff 270/100 $/MWh, water at 1 $/m³,
// 3000 m³ TDP and 8333 m³ RODP.
inline PlantConfig base_case_config() {
  PlantConfig c;
  c.tdp = {.alpha_h = 4.0, .beta_h = 0.05, .w_min = 0.0, .w_max = 3000.0,
           .cost_a = 0.008, .cost_b = 2.0, .cost_c = 0.0};
  c.rodp = {.alpha_r = 166.67, .w_min = 0.0, .w_max = 8333.0};
  c.tariff = {.pi_plus = 270.0, .pi_minus = 100.0, .pi_zero = 0.0, .pi_w = 1.0};
  return c;
}

}  // namespace wdp
