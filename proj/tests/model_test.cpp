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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "wdp/model.hpp"
#include "wdp/oracle/random_config.hpp"

namespace wdp {
namespace {

TEST(ValidateConfig, BaseCaseIsValid) {
  const PlantConfig c = base_case_config();
  EXPECT_TRUE(check_config(c).empty());
  EXPECT_EQ(validate_config(c), c);
}

TEST(ValidateConfig, ExportAboveImportIsTariffViolation) {
  PlantConfig c = base_case_config();
  c.tariff.pi_minus = 300.0;
  try {
    validate_config(c);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.has(ViolationKind::TariffViolation));
    EXPECT_EQ(e.violations().size(), 1u);
  }
}

TEST(ValidateConfig, DemandAboveMinimumOutputIsSizingViolation) {
  PlantConfig c = base_case_config();
  c.water_demand = 100.0;
  try {
    validate_config(c);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.has(ViolationKind::SizingViolation));
  }
  c.tdp.w_min = 60.0;
  c.rodp.w_min = 40.0;
  EXPECT_TRUE(check_config(c).empty());
}

TEST(ValidateConfig, LinearOrConcaveCostIsRejected) {
  PlantConfig c = base_case_config();
  c.tdp.cost_a = 0.0;
  EXPECT_THROW(
      {
        try {
          validate_config(c);
        } catch (const ValidationError& e) {
          EXPECT_TRUE(e.has(ViolationKind::NonConvexCost));
          throw;
        }
      },
      ValidationError);
  c.tdp.cost_a = -1.0;
  ASSERT_EQ(check_config(c).size(), 1u);
  EXPECT_EQ(check_config(c)[0].kind, ViolationKind::NonConvexCost);
}

TEST(ValidateConfig, NegativeAndMisorderedParameters) {
  PlantConfig c = base_case_config();
  c.tdp.alpha_h = 0.0;
  c.rodp.alpha_r = -1.0;
  c.tariff.pi_w = -0.1;
  c.rodp.w_min = 9000.0;  // above w_max
  const auto v = check_config(c);
  EXPECT_EQ(v.size(), 4u);
  for (const auto& x : v) EXPECT_EQ(x.kind, ViolationKind::NegativeParameter) << x.field;
}

TEST(ValidateConfig, NonFiniteParameterIsReported) {
  PlantConfig c = base_case_config();
  c.tariff.pi_plus = std::numeric_limits<double>::quiet_NaN();
  const auto v = check_config(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::NonFiniteParameter);
  EXPECT_EQ(v[0].field, "tariff.pi_plus");
}

TEST(ValidateConfig, ReportsEveryViolationAtOnce) {
  PlantConfig c = base_case_config();
  c.tariff.pi_minus = 300.0;
  c.water_demand = 1.0;
  c.tdp.cost_a = 0.0;
  c.interval_hours = 0.0;
  try {
    validate_config(c);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.has(ViolationKind::TariffViolation));
    EXPECT_TRUE(e.has(ViolationKind::SizingViolation));
    EXPECT_TRUE(e.has(ViolationKind::NonConvexCost));
    EXPECT_TRUE(e.has(ViolationKind::NegativeParameter));
    EXPECT_NE(std::string(e.what()).find("tariff.pi_minus"), std::string::npos);
  }
}

TEST(ValidateConfig, IsIdempotent) {
  oracle::RandomConfigGenerator gen(11);
  for (int i = 0; i < 200; ++i) {
    const PlantConfig c = gen();
    const PlantConfig once = validate_config(c);
    EXPECT_EQ(validate_config(once), once);
  }
}

TEST(EtaH, Ratio) {
  EXPECT_DOUBLE_EQ(eta_h({.alpha_h = 4.0, .beta_h = 0.05}), 80.0);
  EXPECT_DOUBLE_EQ(eta_h({.alpha_h = 1.0, .beta_h = 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(eta_h({.alpha_h = 6.0, .beta_h = 0.05}), 120.0);
}

TEST(MakeDispatch, DerivedFieldsRoundTrip) {
  oracle::RandomConfigGenerator gen(5);
  for (int i = 0; i < 500; ++i) {
    const PlantConfig c = gen();
    const double w_h = gen.uniform(c.tdp.w_min, c.tdp.w_max);
    const double w_r = gen.uniform(c.rodp.w_min, c.rodp.w_max);
    const double g = gen.renewables(c);
    const Dispatch d = make_dispatch(w_h, w_r, g, c);
    EXPECT_NEAR(d.q_h, d.w_h / eta_h(c.tdp), 1e-9 * std::max(1.0, d.q_h));
    EXPECT_NEAR(d.q_r, d.w_r / c.rodp.alpha_r, 1e-9 * std::max(1.0, d.q_r));
    EXPECT_NEAR(d.p_h, d.w_h / c.tdp.alpha_h, 1e-9 * std::max(1.0, d.p_h));
    EXPECT_NEAR(d.w_h, c.tdp.alpha_h * d.p_h, 1e-9 * std::max(1.0, d.w_h));
    EXPECT_NEAR(d.w_h, eta_h(c.tdp) * d.q_h, 1e-9 * std::max(1.0, d.w_h));
  }
}

TEST(MakeDispatch, SnapsTinyExchangeToNetZero) {
  const PlantConfig c = base_case_config();
  // q_r - q_h = 0 exactly at these setpoints; offset g by less than the
  // tolerance.
  const Dispatch d = make_dispatch(80.0, 0.0, 0.0, c);
  EXPECT_EQ(d.mode, Mode::EX);
  const double w_r = c.rodp.alpha_r * 1.0;
  const Dispatch nz = make_dispatch(80.0, w_r, 5e-7, c);
  EXPECT_EQ(nz.z, 0.0);
  EXPECT_EQ(nz.mode, Mode::NZ);
  const Dispatch exact = make_dispatch(80.0, w_r, 0.0, c);
  EXPECT_EQ(exact.mode, Mode::NZ);
  const Dispatch im = make_dispatch(0.0, w_r, 0.0, c);
  EXPECT_EQ(im.mode, Mode::IM);
  EXPECT_NEAR(im.z, 1.0, 1e-12);
  const Dispatch ex = make_dispatch(80.0, w_r, 2e-6, c);
  EXPECT_EQ(ex.mode, Mode::EX);
  EXPECT_LT(ex.z, 0.0);
}

TEST(ModelEnums, Names) {
  EXPECT_EQ(to_string(Mode::IM), "IM");
  EXPECT_EQ(to_string(TariffRegime::RodpMin), "RodpMin");
  EXPECT_EQ(to_string(ViolationKind::SizingViolation), "SizingViolation");
}

}  // namespace
}  // namespace wdp
