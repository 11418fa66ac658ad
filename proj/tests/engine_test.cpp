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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wdp/engine.hpp"
#include "wdp/oracle/random_config.hpp"

namespace wdp {
namespace {

using namespace wdp::testing;
using engine::dispatch;

int sign(double z) { return z > 0.0 ? 1 : (z < 0.0 ? -1 : 0); }

TEST(MarginalCostInverse, Examples) {
  const TdpParams tdp = base_case_config().tdp;
  EXPECT_DOUBLE_EQ(engine::marginal_cost_inverse(9.0, tdp), 437.5);
  EXPECT_DOUBLE_EQ(engine::marginal_cost_inverse(2.0, tdp), 0.0);
  EXPECT_NEAR(engine::marginal_cost_inverse(12.3335, tdp), 645.84, 0.01);
  EXPECT_DOUBLE_EQ(engine::marginal_cost_inverse(1.0, tdp), 0.0);  // floored
}

TEST(TdpSetpoint, BaseCase) {
  const PlantConfig c = base_case_config();
  EXPECT_NEAR(engine::tdp_setpoint(Mode::EX, c), frozen::kWhEx, 1e-9);
  EXPECT_NEAR(engine::tdp_setpoint(Mode::NZ, c), frozen::kWhNz, 1e-9);
  EXPECT_NEAR(engine::tdp_setpoint(Mode::NZ, c), 2583.4, 0.5);
  EXPECT_DOUBLE_EQ(engine::tdp_setpoint(Mode::IM, c), frozen::kWhIm);

  PlantConfig roomy = c;
  roomy.tdp.w_max = 1e6;
  EXPECT_NEAR(engine::tdp_setpoint(Mode::IM, roomy), 3875.0, 1e-9);
}

TEST(TdpSetpoint, InteriorOrdering) {
  oracle::RandomConfigGenerator gen(3);
  int interior = 0;
  for (int i = 0; i < 2000; ++i) {
    const PlantConfig c = gen();
    if (engine::classify_regime(c) != TariffRegime::Interior) continue;
    ++interior;
    const auto s = engine::mode_setpoints(c);
    EXPECT_GE(s.w_h_im, s.w_h_nz);
    EXPECT_GE(s.w_h_nz, s.w_h_ex);
    for (double w : {s.w_h_im, s.w_h_nz, s.w_h_ex}) {
      EXPECT_GE(w, c.tdp.w_min);
      EXPECT_LE(w, c.tdp.w_max);
    }
  }
  EXPECT_GT(interior, 200);
}

TEST(ComputeThresholds, BaseCase) {
  const Thresholds th = engine::compute_thresholds(base_case_config());
  EXPECT_EQ(th.tariff_regime, TariffRegime::Interior);
  EXPECT_NEAR(th.gamma_im, frozen::kGammaIm, 1e-9);
  EXPECT_NEAR(th.gamma_nz1, frozen::kGammaNz1, 1e-9);
  EXPECT_NEAR(th.gamma_nz2, frozen::kGammaNz2, 1e-7);
  EXPECT_NEAR(th.gamma_ex, frozen::kGammaEx, 1e-7);
  // Figures as usually quoted (w_max_r / alpha_r rounded to 50).
  EXPECT_NEAR(th.gamma_nz1, -32.29, 0.01);
  EXPECT_NEAR(th.gamma_nz2, 17.71, 0.01);
  EXPECT_NEAR(th.gamma_ex, 28.125, 0.01);
}

TEST(ComputeThresholds, HighWaterPinsRodpAtMax) {
  const Thresholds th = engine::compute_thresholds(high_water());
  EXPECT_EQ(th.tariff_regime, TariffRegime::RodpMax);
  EXPECT_DOUBLE_EQ(engine::pinned_rodp_output(high_water(), th.tariff_regime), 8333.0);
  EXPECT_NEAR(th.gamma_im, 12.5, 0.01);
  EXPECT_NEAR(th.gamma_im, 8333.0 / 166.67 - 3000.0 / 80.0, 1e-12);
  // w_h^EX at pi_w = 2 is 2750.
  EXPECT_NEAR(th.gamma_ex, 8333.0 / 166.67 - 2750.0 / 80.0, 1e-12);
  EXPECT_EQ(th.gamma_nz1, th.gamma_im);
  EXPECT_EQ(th.gamma_nz2, th.gamma_ex);
}

TEST(ComputeThresholds, LowWaterPinsRodpAtMin) {
  const PlantConfig c = low_water();
  const Thresholds th = engine::compute_thresholds(c);
  EXPECT_EQ(th.tariff_regime, TariffRegime::RodpMin);
  EXPECT_DOUBLE_EQ(engine::pinned_rodp_output(c, th.tariff_regime), 0.0);
  EXPECT_NEAR(engine::tdp_setpoint(Mode::EX, c), 950.0, 1e-9);
  EXPECT_NEAR(th.gamma_ex, -11.875, 1e-12);
  EXPECT_EQ(th.gamma_nz1, th.gamma_im);
  EXPECT_EQ(th.gamma_nz2, th.gamma_ex);
}

TEST(ComputeThresholds, DegenerateTariffCollapsesToOneValue) {
  PlantConfig c = base_case_config();
  c.tariff.pi_plus = c.tariff.pi_minus = 100.0;
  const auto s = engine::mode_setpoints(c);
  EXPECT_DOUBLE_EQ(s.w_h_im, s.w_h_ex);
  const Thresholds th = engine::compute_thresholds(c);
  EXPECT_EQ(th.tariff_regime, TariffRegime::Degenerate);
  EXPECT_DOUBLE_EQ(th.gamma_im, th.gamma_ex);
  EXPECT_DOUBLE_EQ(th.gamma_nz1, th.gamma_nz2);
  EXPECT_DOUBLE_EQ(th.gamma_im, 8333.0 / 166.67 - s.w_h_im / 80.0);
}

TEST(ClassifyRegime, EqualityWithEitherPriceIsInterior) {
  PlantConfig c = base_case_config();
  c.tariff.pi_plus = c.rodp.alpha_r * c.tariff.pi_w;
  EXPECT_EQ(engine::classify_regime(c), TariffRegime::Interior);
  c = base_case_config();
  c.tariff.pi_minus = c.rodp.alpha_r * c.tariff.pi_w;
  EXPECT_EQ(engine::classify_regime(c), TariffRegime::Interior);
  c.tariff.pi_plus = c.tariff.pi_minus;
  EXPECT_EQ(engine::classify_regime(c), TariffRegime::Interior);
}

TEST(ComputeThresholds, DoesNotDependOnRenewables) {
  const engine::ThresholdPolicy policy(base_case_config());
  const Thresholds before = policy.thresholds();
  for (double g : {0.0, 10.0, 1e6}) (void)policy(g);
  EXPECT_EQ(policy.thresholds(), before);
  EXPECT_EQ(engine::compute_thresholds(base_case_config()), before);
}

TEST(Dispatch, BaseCaseNetZeroAtNoSolar) {
  const Dispatch d = dispatch(0.0, base_case_config());
  EXPECT_NEAR(d.w_h, frozen::kWhNz, 1e-9);
  EXPECT_NEAR(d.w_r, frozen::kWrAtZero, 1e-6);
  EXPECT_NEAR(d.w_r, 5382.0, 1.0);
  EXPECT_EQ(d.z, 0.0);
  EXPECT_EQ(d.mode, Mode::NZ);
}

TEST(Dispatch, BaseCaseExportsAboveGammaEx) {
  const Dispatch d = dispatch(40.0, base_case_config());
  EXPECT_DOUBLE_EQ(d.w_h, 1750.0);
  EXPECT_DOUBLE_EQ(d.w_r, 8333.0);
  EXPECT_NEAR(d.z, 8333.0 / 166.67 - 1750.0 / 80.0 - 40.0, 1e-12);
  EXPECT_NEAR(d.z, -11.875, 0.01);
  EXPECT_EQ(d.mode, Mode::EX);
}

TEST(Dispatch, BaseCaseUpperTransitionBand) {
  const Dispatch d = dispatch(20.0, base_case_config());
  EXPECT_NEAR(d.w_h, 80.0 * (8333.0 / 166.67 - 20.0), 1e-9);
  EXPECT_NEAR(d.w_h, 2400.0, 0.5);
  EXPECT_DOUBLE_EQ(d.w_r, 8333.0);
  EXPECT_EQ(d.z, 0.0);
  EXPECT_EQ(d.mode, Mode::NZ);
}

TEST(Dispatch, HighWaterImportsAtNoSolar) {
  const Dispatch d = dispatch(0.0, high_water());
  EXPECT_DOUBLE_EQ(d.w_h, 3000.0);
  EXPECT_DOUBLE_EQ(d.w_r, 8333.0);
  EXPECT_NEAR(d.z, 12.5, 0.01);
  EXPECT_EQ(d.mode, Mode::IM);
}

TEST(Dispatch, LowWaterIsConstant) {
  for (double g : {0.0, 10.0, 37.0, 500.0}) {
    const Dispatch d = dispatch(g, low_water());
    EXPECT_NEAR(d.w_h, 950.0, 1e-9) << g;
    EXPECT_EQ(d.w_r, 0.0) << g;
    EXPECT_EQ(d.mode, Mode::EX) << g;
  }
}

TEST(Dispatch, FiveBandConfigVisitsEveryBand) {
  const PlantConfig c = five_band();
  const Thresholds th = engine::compute_thresholds(c);
  ASSERT_GT(th.gamma_im, 0.0);
  const double lo = 8000.0 / 166.67;
  // IM
  Dispatch d = dispatch(5.0, c);
  EXPECT_EQ(d.mode, Mode::IM);
  EXPECT_DOUBLE_EQ(d.w_h, 3000.0);
  EXPECT_DOUBLE_EQ(d.w_r, 8000.0);
  // NZ, RO at its floor, TDP balancing
  d = dispatch(13.0, c);
  EXPECT_EQ(d.mode, Mode::NZ);
  EXPECT_DOUBLE_EQ(d.w_r, 8000.0);
  EXPECT_NEAR(d.w_h, 80.0 * (lo - 13.0), 1e-9);
  // NZ, TDP at its NZ setpoint, RO following g
  d = dispatch(16.5, c);
  EXPECT_EQ(d.mode, Mode::NZ);
  EXPECT_NEAR(d.w_h, frozen::kWhNz, 1e-9);
  EXPECT_NEAR(d.w_r, 166.67 * (frozen::kWhNz / 80.0 + 16.5), 1e-9);
}

TEST(Dispatch, RejectsNegativeRenewables) {
  EXPECT_THROW(dispatch(-1.0, base_case_config()), std::domain_error);
  EXPECT_THROW(dispatch(std::nan(""), base_case_config()), std::domain_error);
}

TEST(GridMode, BaseThresholds) {
  const Thresholds th = engine::compute_thresholds(base_case_config());
  EXPECT_EQ(engine::grid_mode(0.0, th), 0);
  EXPECT_EQ(engine::grid_mode(30.0, th), -1);
  EXPECT_EQ(engine::grid_mode(th.gamma_ex, th), 0);
  EXPECT_EQ(engine::grid_mode(th.gamma_im, th), 0);
  EXPECT_EQ(engine::grid_mode(5.0, engine::compute_thresholds(five_band())), 1);
}

TEST(DispatchRodpOnly, BaseRodp) {
  const PlantConfig c = base_case_config();
  Dispatch d = engine::dispatch_rodp_only(0.0, c.rodp, c.tariff);
  EXPECT_EQ(d.w_r, 0.0);
  EXPECT_EQ(d.w_h, 0.0);
  d = engine::dispatch_rodp_only(25.0, c.rodp, c.tariff);
  EXPECT_NEAR(d.w_r, 4166.75, 1e-9);
  EXPECT_EQ(d.mode, Mode::NZ);
  d = engine::dispatch_rodp_only(60.0, c.rodp, c.tariff);
  EXPECT_DOUBLE_EQ(d.w_r, 8333.0);
  EXPECT_EQ(d.mode, Mode::EX);
  EXPECT_EQ(d.q_h, 0.0);
  EXPECT_EQ(d.p_h, 0.0);
}

TEST(DispatchRodpOnly, PinnedOutsideInteriorRegime) {
  const PlantConfig hi = high_water();
  EXPECT_DOUBLE_EQ(engine::dispatch_rodp_only(0.0, hi.rodp, hi.tariff).w_r, 8333.0);
  EXPECT_EQ(engine::dispatch_rodp_only(0.0, hi.rodp, hi.tariff).mode, Mode::IM);
  const PlantConfig lo = low_water();
  EXPECT_EQ(engine::dispatch_rodp_only(30.0, lo.rodp, lo.tariff).w_r, 0.0);
}

TEST(DispatchTdpOnly, Examples) {
  const PlantConfig c = base_case_config();
  EXPECT_DOUBLE_EQ(engine::dispatch_tdp_only(c.tdp, c.tariff).w_h, 1750.0);
  Tariff t = c.tariff;
  t.pi_minus = 0.0;
  EXPECT_NEAR(engine::dispatch_tdp_only(c.tdp, t).w_h, 500.0, 1e-9);
  t.pi_w = 0.0;
  EXPECT_EQ(engine::dispatch_tdp_only(c.tdp, t).w_h, 0.0);
  // Does not depend on g.
  EXPECT_EQ(engine::dispatch_tdp_only(c.tdp, c.tariff, 0.0).w_h,
            engine::dispatch_tdp_only(c.tdp, c.tariff, 77.0).w_h);
}

// Properties over random configs.

TEST(EngineProperty, ThresholdOrderingInInteriorRegime) {
  oracle::RandomConfigGenerator gen(101);
  int n = 0;
  while (n < 2000) {
    const PlantConfig c = gen();
    const Thresholds th = engine::compute_thresholds(c);
    if (th.tariff_regime != TariffRegime::Interior) continue;
    ++n;
    EXPECT_GE(th.gamma_ex, th.gamma_nz2);
    EXPECT_GE(th.gamma_nz2, th.gamma_nz1);
    EXPECT_GE(th.gamma_nz1, th.gamma_im);
  }
}

TEST(EngineProperty, GapWidensWithPriceSpreadAndRoRange) {
  oracle::RandomConfigGenerator gen(102);
  for (int ray = 0; ray < 100; ++ray) {
    PlantConfig c = gen();
    double last = -INFINITY;
    // Widen the spread by raising pi_plus.
    for (int k = 0; k < 20; ++k) {
      const Thresholds th = engine::compute_thresholds(c);
      const double gap = th.gamma_ex - th.gamma_im;
      EXPECT_GE(gap, last - 1e-9 * std::abs(gap));
      last = gap;
      c.tariff.pi_plus += gen.uniform(0.0, 30.0);
    }
    // Widen the RO range by raising w_max.
    last = -INFINITY;
    for (int k = 0; k < 20; ++k) {
      const Thresholds th = engine::compute_thresholds(c);
      const double gap = th.gamma_ex - th.gamma_im;
      EXPECT_GE(gap, last - 1e-9 * std::abs(gap));
      last = gap;
      c.rodp.w_max += gen.uniform(0.0, 500.0);
    }
  }
}

TEST(EngineProperty, MonotoneAndPiecewiseLinearInRenewables) {
  oracle::RandomConfigGenerator gen(103);
  for (int i = 0; i < 300; ++i) {
    const PlantConfig c = gen();
    const engine::ThresholdPolicy policy(c);
    const double g_top = 1.2 * (c.rodp.w_max / c.rodp.alpha_r + c.tdp.w_max / eta_h(c.tdp)) + 1;
    Dispatch prev = policy(0.0);
    for (int k = 1; k <= 200; ++k) {
      const double g = g_top * k / 200.0;
      const Dispatch d = policy(g);
      EXPECT_LE(d.w_h, prev.w_h + 1e-9 * std::max(1.0, prev.w_h));
      EXPECT_GE(d.w_r, prev.w_r - 1e-9 * std::max(1.0, prev.w_r));
      prev = d;
    }
  }
  // Linear inside each band of the five-band config.
  const engine::ThresholdPolicy policy(five_band());
  const Thresholds th = policy.thresholds();
  const std::vector<double> edges{0.0, th.gamma_im, th.gamma_nz1, th.gamma_nz2, th.gamma_ex, 60.0};
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
    const double a = edges[b] + 1e-3, z = edges[b + 1] - 1e-3, m = 0.5 * (a + z);
    const Dispatch da = policy(a), dz = policy(z), dm = policy(m);
    EXPECT_NEAR(dm.w_h, 0.5 * (da.w_h + dz.w_h), 1e-6) << "band " << b;
    EXPECT_NEAR(dm.w_r, 0.5 * (da.w_r + dz.w_r), 1e-6) << "band " << b;
  }
}

TEST(EngineProperty, ModeSignMatchesGridMode) {
  oracle::RandomConfigGenerator gen(104);
  for (int i = 0; i < 10000; ++i) {
    const PlantConfig c = gen();
    const double g = gen.renewables(c);
    const engine::ThresholdPolicy policy(c);
    const Dispatch d = policy(g);
    EXPECT_EQ(sign(d.z), engine::grid_mode(g, policy.thresholds())) << "i=" << i << " g=" << g;
    EXPECT_EQ(d.mode, sign(d.z) > 0 ? Mode::IM : (sign(d.z) < 0 ? Mode::EX : Mode::NZ));
  }
}

TEST(EngineProperty, DispatchIsFeasible) {
  oracle::RandomConfigGenerator gen(105);
  for (int i = 0; i < 5000; ++i) {
    const PlantConfig c = gen();
    const double g = gen.renewables(c);
    const Dispatch d = dispatch(g, c);
    EXPECT_GE(d.w_h, c.tdp.w_min);
    EXPECT_LE(d.w_h, c.tdp.w_max);
    EXPECT_GE(d.w_r, c.rodp.w_min);
    EXPECT_LE(d.w_r, c.rodp.w_max);
    const double z = d.q_r - d.q_h - g;
    EXPECT_NEAR(d.z, z, kNetZeroTolerance);
  }
}

TEST(EngineProperty, RodpIgnoresGridPricesWithinRegime) {
  oracle::RandomConfigGenerator gen(106);
  for (int i = 0; i < 500; ++i) {
    const PlantConfig c = gen();
    const TariffRegime regime = engine::classify_regime(c);
    PlantConfig p = c;
    const double v = c.rodp.alpha_r * c.tariff.pi_w;
    // Move both prices while keeping the regime.
    switch (regime) {
      case TariffRegime::Interior:
        p.tariff.pi_plus = gen.uniform(v, v + 200.0);
        p.tariff.pi_minus = gen.uniform(0.0, v);
        break;
      case TariffRegime::RodpMax:
        p.tariff.pi_minus = gen.uniform(0.0, v);
        p.tariff.pi_plus = gen.uniform(p.tariff.pi_minus, v);
        break;
      case TariffRegime::RodpMin:
        p.tariff.pi_minus = gen.uniform(v, v + 200.0);
        p.tariff.pi_plus = p.tariff.pi_minus + gen.uniform(0.0, 200.0);
        break;
      case TariffRegime::Degenerate: continue;
    }
    ASSERT_EQ(engine::classify_regime(p), regime);
    for (int k = 0; k < 10; ++k) {
      const double g = gen.renewables(c);
      const double a = dispatch(g, c).w_r, b = dispatch(g, p).w_r;
      EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, a)) << "g=" << g;
    }
  }
}

TEST(EngineProperty, ContinuousInRenewables) {
  oracle::RandomConfigGenerator gen(107);
  for (int i = 0; i < 300; ++i) {
    const PlantConfig c = gen();
    const engine::ThresholdPolicy policy(c);
    const Thresholds th = policy.thresholds();
    std::vector<double> probes{gen.renewables(c)};
    for (double t : {th.gamma_im, th.gamma_nz1, th.gamma_nz2, th.gamma_ex}) {
      if (t >= 0.0) probes.push_back(t);
    }
    for (double g : probes) {
      const Dispatch a = policy(g), b = policy(g + 1e-6);
      const double scale = 1e-9 * std::max({1.0, a.w_h, a.w_r});
      EXPECT_LE(std::abs(a.w_h - b.w_h), 1e-3 + scale);
      EXPECT_LE(std::abs(a.w_r - b.w_r), 1e-3 + scale);
    }
  }
}

}  // namespace
}  // namespace wdp
