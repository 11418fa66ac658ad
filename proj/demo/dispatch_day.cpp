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

// Runs one day of the base plant under each policy and prints the hourly
// dispatch of the optimal one.
//
//   dispatch_day [profile.csv]

#include <cstdio>
#include <exception>
#include <iostream>

#include "wdp/wdp.hpp"

int main(int argc, char** argv) {
  using namespace wdp;
  try {
    const PlantConfig config = validate_config(base_case_config());
    const sim::RenewableProfile profile =
        argc > 1 ? sim::load_profile(argv[1]) : sim::constant_profile(24, 0.0, "no-solar");

    const engine::ThresholdPolicy policy(config);
    const Thresholds& th = policy.thresholds();
    std::printf("regime %s, thresholds %.3f %.3f %.3f %.3f MWh\n\n",
                std::string(to_string(th.tariff_regime)).c_str(), th.gamma_im,
                th.gamma_nz1, th.gamma_nz2, th.gamma_ex);

    const auto optimal = sim::simulate(profile, config, sim::Algorithm::Optimal);
    std::printf("%5s %8s %9s %9s %8s %4s %10s\n", "hour", "g", "w_h", "w_r", "z", "mode",
                "profit");
    for (const auto& row : optimal.intervals) {
      const Dispatch& d = row.dispatch;
      std::printf("%5ld %8.3f %9.1f %9.1f %8.3f %4s %10.2f\n", row.index, row.g, d.w_h,
                  d.w_r, d.z, std::string(to_string(d.mode)).c_str(), row.profit.profit);
    }

    std::printf("\n%-12s %12s\n", "policy", "daily profit");
    for (auto a : {sim::Algorithm::Optimal, sim::Algorithm::MaxRodp,
                   sim::Algorithm::PassiveTdp}) {
      const auto report = sim::simulate(profile, config, a);
      std::printf("%-12s %12.2f\n", std::string(to_string(a)).c_str(),
                  report.totals.profit.profit);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
