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

// Region-wise KKT solver for the single-interval dispatch problem.
//
// The objective is concave but kinked at z = 0, so the feasible set is split
// by the sign of the net exchange z into three convex, differentiable
// sub-problems (IM: z > 0, NZ: z = 0, EX: z < 0). Each is solved in closed
// form from its stationarity conditions; NZ is a one-dimensional strictly
// concave problem along the power-balance line, so its optimum is either the
// stationary point or one of the bound-active points. Every candidate is
// checked for feasibility and the best feasible one is the global optimum.
//
// This file works in electricity space (q_h, q_r) and does not call into the
// threshold engine, so it can be used to check it.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "wdp/economics/accounting.hpp"
#include "wdp/model.hpp"

namespace wdp::oracle {

enum class CandidateKind {
  Import,
  NetZeroInterior,
  NetZeroRodpLower,
  NetZeroRodpUpper,
  NetZeroTdpLower,
  NetZeroTdpUpper,
  NetZeroCorner,
  Export,
};

inline std::string_view to_string(CandidateKind k) {
  switch (k) {
    case CandidateKind::Import: return "IM";
    case CandidateKind::NetZeroInterior: return "NZ-interior";
    case CandidateKind::NetZeroRodpLower: return "NZ-rodp-lower";
    case CandidateKind::NetZeroRodpUpper: return "NZ-rodp-upper";
    case CandidateKind::NetZeroTdpLower: return "NZ-tdp-lower";
    case CandidateKind::NetZeroTdpUpper: return "NZ-tdp-upper";
    case CandidateKind::NetZeroCorner: return "NZ-corner";
    case CandidateKind::Export: return "EX";
  }
  return "?";
}

struct RegionCandidate {
  Mode region = Mode::NZ;
  CandidateKind kind = CandidateKind::NetZeroInterior;
  Dispatch dispatch;
  // Power-balance multiplier of the NZ sub-problem, i.e. the marginal value
  // of one more MWh of renewables. Empty for IM/EX and where both plants sit
  // on a bound (the multiplier is then not unique).
  std::optional<double> multiplier_mu;
  bool feasible = false;
  double profit = 0.0;
  double z_raw = 0.0;  // before net-zero snapping
};

struct RegionSolution {
  std::vector<RegionCandidate> candidates;
  std::size_t best_index = 0;

  const RegionCandidate& best_candidate() const { return candidates[best_index]; }
  const Dispatch& best() const { return candidates[best_index].dispatch; }
};

class NoFeasibleCandidate : public std::logic_error {
 public:
  NoFeasibleCandidate()
      : std::logic_error("no feasible region candidate; config is invalid") {}
};

namespace detail {

// Fuel level where the marginal fuel cost 2a p + b equals y, floored at zero.
inline double fuel_at_marginal_cost(double y, const TdpParams& tdp) {
  return std::max(0.0, (y - tdp.cost_b) / (2.0 * tdp.cost_a));
}

inline bool within(double v, double lo, double hi) {
  const double tol = 1e-9 * std::max({1.0, std::abs(lo), std::abs(hi)});
  return v >= lo - tol && v <= hi + tol;
}

}  // namespace detail

inline RegionSolution solve_regions(double g, const PlantConfig& c) {
  if (!(g >= 0.0)) throw std::domain_error("renewable output g must be >= 0");

  const TdpParams& tdp = c.tdp;
  const RodpParams& rodp = c.rodp;
  const Tariff& t = c.tariff;
  const double eta = tdp.alpha_h / tdp.beta_h;
  const double rodp_value = rodp.alpha_r * t.pi_w;  // $/MWh routed to RO

  // Bounds in electricity space.
  const double qh_lo = tdp.w_min / eta, qh_hi = tdp.w_max / eta;
  const double qr_lo = rodp.w_min / rodp.alpha_r, qr_hi = rodp.w_max / rodp.alpha_r;

  // TDP output maximizing water + electricity value when electricity is
  // priced at `price`: stationarity C'(p) = alpha_h pi_w + beta_h price.
  auto tdp_response = [&](double price) {
    const double q = tdp.beta_h *
        detail::fuel_at_marginal_cost(tdp.alpha_h * t.pi_w + tdp.beta_h * price, tdp);
    return std::clamp(q, qh_lo, qh_hi);
  };
  // Marginal value of electricity implied by TDP stationarity at q_h.
  auto tdp_marginal_value = [&](double q_h) {
    const double p = q_h / tdp.beta_h;
    return eta * ((2.0 * tdp.cost_a * p + tdp.cost_b) / tdp.alpha_h - t.pi_w);
  };

  RegionSolution sol;
  auto add = [&](Mode region, CandidateKind kind, double q_h, double q_r,
                 std::optional<double> mu) {
    RegionCandidate cand;
    cand.region = region;
    cand.kind = kind;
    cand.multiplier_mu = mu;
    const double w_h = q_h * eta;
    const double w_r = q_r * rodp.alpha_r;
    cand.z_raw = q_r - q_h - g;
    const bool in_box = detail::within(w_h, tdp.w_min, tdp.w_max) &&
                        detail::within(w_r, rodp.w_min, rodp.w_max);
    bool sign_ok = false;
    switch (region) {
      case Mode::IM: sign_ok = cand.z_raw > 0.0; break;
      case Mode::EX: sign_ok = cand.z_raw < 0.0; break;
      case Mode::NZ:
        sign_ok = std::abs(cand.z_raw) <= 1e-9 * std::max(1.0, std::abs(g));
        break;
    }
    cand.feasible = in_box && sign_ok;
    const double w_h_c = std::clamp(w_h, tdp.w_min, tdp.w_max);
    const double w_r_c = std::clamp(w_r, rodp.w_min, rodp.w_max);
    cand.dispatch = make_dispatch(w_h_c, w_r_c, g, c);
    if (region == Mode::NZ && cand.feasible) {
      cand.dispatch.z = 0.0;
      cand.dispatch.mode = Mode::NZ;
    }
    cand.profit = economics::profit_at(w_h, w_r, g, c);
    sol.candidates.push_back(cand);
  };

  // IM: grid electricity costs pi_plus at the margin. RO output is linear in
  // the objective, so it sits at a bound; ties go to the lower bound.
  add(Mode::IM, CandidateKind::Import, tdp_response(t.pi_plus),
      rodp_value > t.pi_plus ? qr_hi : qr_lo, std::nullopt);

  // NZ: interior stationary point, then the bound-active points.
  const double qh_star = tdp.beta_h *
      detail::fuel_at_marginal_cost(tdp.alpha_h * t.pi_w + tdp.beta_h * rodp_value, tdp);
  add(Mode::NZ, CandidateKind::NetZeroInterior, qh_star, qh_star + g, rodp_value);
  add(Mode::NZ, CandidateKind::NetZeroRodpLower, qr_lo - g, qr_lo,
      tdp_marginal_value(std::max(0.0, qr_lo - g)));
  add(Mode::NZ, CandidateKind::NetZeroRodpUpper, qr_hi - g, qr_hi,
      tdp_marginal_value(std::max(0.0, qr_hi - g)));
  add(Mode::NZ, CandidateKind::NetZeroTdpLower, qh_lo, qh_lo + g, rodp_value);
  add(Mode::NZ, CandidateKind::NetZeroTdpUpper, qh_hi, qh_hi + g, rodp_value);
  for (double qh : {qh_lo, qh_hi}) {
    for (double qr : {qr_lo, qr_hi}) {
      add(Mode::NZ, CandidateKind::NetZeroCorner, qh, qr, std::nullopt);
    }
  }

  // EX: exported electricity earns pi_minus at the margin; ties go to the
  // upper RO bound.
  add(Mode::EX, CandidateKind::Export, tdp_response(t.pi_minus),
      rodp_value >= t.pi_minus ? qr_hi : qr_lo, std::nullopt);

  bool found = false;
  for (std::size_t i = 0; i < sol.candidates.size(); ++i) {
    const auto& cand = sol.candidates[i];
    if (!cand.feasible) continue;
    if (!found || cand.profit > sol.candidates[sol.best_index].profit) {
      sol.best_index = i;
      found = true;
    }
  }
  if (!found) throw NoFeasibleCandidate();
  return sol;
}

}  // namespace wdp::oracle
