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

// Command-line front end. Every subcommand is a thin wrapper over library
// calls; run() takes explicit streams so tests can drive it in-process.
//
// Exit status: 0 ok, 1 unexpected error, 2 usage, 3 invalid config/profile,
// 4 verify found a discrepancy.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wdp/benchmarks.hpp"
#include "wdp/economics/accounting.hpp"
#include "wdp/economics/perturbation.hpp"
#include "wdp/engine.hpp"
#include "wdp/io/config_json.hpp"
#include "wdp/model.hpp"
#include "wdp/oracle/compare.hpp"
#include "wdp/sim/profile.hpp"
#include "wdp/sim/report_io.hpp"
#include "wdp/sim/simulate.hpp"

namespace wdp::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kInvalidInput = 3,
  kDiscrepancy = 4,
};

// WDP_LOG: "quiet", "info" or "debug". Unset or unrecognized means quiet.
inline int log_level() {
  const char* v = std::getenv("WDP_LOG");
  if (v == nullptr) return 0;
  const std::string s(v);
  if (s == "debug") return 2;
  if (s == "info") return 1;
  return 0;
}

inline std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v == 0.0 ? 0.0 : v);  // no "-0.0000"
  return buf;
}

namespace detail {

struct Options {
  std::string config_path;
  std::string profile_path;
  std::string algorithm = "optimal";
  std::vector<std::string> algorithms;
  std::string output = "text";
  std::string out_path;
  double g = 0.0;
  std::string parameter;
  std::vector<std::string> parameters;
  std::vector<double> values;
  std::vector<double> factors;
  double g_max = 50.0;
  int steps = 51;
  int resolution = 1000;
  double tolerance = 1e-6;
};

class Logger {
 public:
  Logger(std::ostream& err, int level) : err_(err), level_(level) {}
  void info(const std::string& msg) const {
    if (level_ >= 1) err_ << "[wdp] " << msg << '\n';
  }
  void debug(const std::string& msg) const {
    if (level_ >= 2) err_ << "[wdp] " << msg << '\n';
  }

 private:
  std::ostream& err_;
  int level_;
};

inline PlantConfig load_valid_config(const Options& o, const Logger& log) {
  PlantConfig c = validate_config(io::load_config(o.config_path));
  log.info("config " + o.config_path + " fingerprint " + sim::config_fingerprint(c));
  return c;
}

// Writes to --out when given, otherwise to `out`.
template <typename Fn>
void emit(const Options& o, std::ostream& out, Fn&& write) {
  if (o.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw std::runtime_error("cannot write '" + o.out_path + "'");
  write(file);
}

inline void print_dispatch(std::ostream& out, const Dispatch& d,
                           const economics::ProfitBreakdown& p) {
  out << "mode     " << to_string(d.mode) << '\n'
      << "w_h      " << fixed4(d.w_h) << " m3\n"
      << "w_r      " << fixed4(d.w_r) << " m3\n"
      << "q_h      " << fixed4(d.q_h) << " MWh\n"
      << "q_r      " << fixed4(d.q_r) << " MWh\n"
      << "p_h      " << fixed4(d.p_h) << " MBTU\n"
      << "z        " << fixed4(d.z) << " MWh\n"
      << "water    " << fixed4(p.water_revenue) << " $\n"
      << "payment  " << fixed4(p.electricity_payment) << " $\n"
      << "tdp_cost " << fixed4(p.tdp_cost) << " $\n"
      << "profit   " << fixed4(p.profit) << " $\n";
}

inline nlohmann::json dispatch_json(const Dispatch& d, const economics::ProfitBreakdown& p) {
  return {{"w_h", d.w_h},
          {"w_r", d.w_r},
          {"q_h", d.q_h},
          {"q_r", d.q_r},
          {"p_h", d.p_h},
          {"z", d.z},
          {"mode", std::string(to_string(d.mode))},
          {"water_revenue", p.water_revenue},
          {"electricity_payment", p.electricity_payment},
          {"tdp_cost", p.tdp_cost},
          {"profit", p.profit}};
}

inline int cmd_thresholds(const Options& o, std::ostream& out, const Logger& log) {
  const PlantConfig c = load_valid_config(o, log);
  const engine::ThresholdPolicy policy(c);
  const auto& th = policy.thresholds();
  const auto& s = policy.setpoints();
  if (o.output == "json") {
    out << nlohmann::json{{"tariff_regime", std::string(to_string(th.tariff_regime))},
                          {"gamma_im", th.gamma_im},
                          {"gamma_nz1", th.gamma_nz1},
                          {"gamma_nz2", th.gamma_nz2},
                          {"gamma_ex", th.gamma_ex},
                          {"w_h_im", s.w_h_im},
                          {"w_h_nz", s.w_h_nz},
                          {"w_h_ex", s.w_h_ex}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "regime    " << to_string(th.tariff_regime) << '\n'
      << "gamma_im  " << fixed4(th.gamma_im) << " MWh\n"
      << "gamma_nz1 " << fixed4(th.gamma_nz1) << " MWh\n"
      << "gamma_nz2 " << fixed4(th.gamma_nz2) << " MWh\n"
      << "gamma_ex  " << fixed4(th.gamma_ex) << " MWh\n"
      << "w_h_im    " << fixed4(s.w_h_im) << " m3\n"
      << "w_h_nz    " << fixed4(s.w_h_nz) << " m3\n"
      << "w_h_ex    " << fixed4(s.w_h_ex) << " m3\n";
  return kOk;
}

inline int cmd_dispatch(const Options& o, std::ostream& out, const Logger& log) {
  const PlantConfig c = load_valid_config(o, log);
  const Dispatch d = sim::dispatcher(sim::parse_algorithm(o.algorithm), c)(o.g);
  const auto p = economics::profit(d, o.g, c);
  if (o.output == "json") {
    out << dispatch_json(d, p).dump(2) << '\n';
  } else {
    print_dispatch(out, d, p);
  }
  return kOk;
}

inline int cmd_simulate(const Options& o, std::ostream& out, const Logger& log) {
  const PlantConfig c = load_valid_config(o, log);
  const auto profile = sim::load_profile(o.profile_path);
  log.info("profile " + profile.label + ": " + std::to_string(profile.size()) +
           " intervals");
  const auto report = sim::simulate(profile, c, o.algorithm);
  if (o.output == "json") {
    emit(o, out, [&](std::ostream& s) { sim::write_report_json(s, report); });
  } else if (o.output == "csv") {
    emit(o, out, [&](std::ostream& s) { sim::write_report_csv(s, report); });
  } else {
    const auto& t = report.totals;
    emit(o, out, [&](std::ostream& s) {
      s << "algorithm   " << report.algorithm << '\n'
        << "intervals   " << report.intervals.size() << '\n'
        << "water       " << fixed4(t.water) << " m3\n"
        << "imported    " << fixed4(t.imported) << " MWh\n"
        << "exported    " << fixed4(t.exported) << " MWh\n"
        << "water_rev   " << fixed4(t.profit.water_revenue) << " $\n"
        << "payment     " << fixed4(t.profit.electricity_payment) << " $\n"
        << "tdp_cost    " << fixed4(t.profit.tdp_cost) << " $\n"
        << "profit      " << fixed4(t.profit.profit) << " $\n";
    });
  }
  return kOk;
}

inline int cmd_sweep(const Options& o, std::ostream& out, const Logger& log) {
  const PlantConfig c = load_valid_config(o, log);
  const auto profile = sim::load_profile(o.profile_path);
  sim::SweepSpec spec;
  spec.parameter = sim::parse_parameter(o.parameter);
  spec.values = o.values;
  if (!o.algorithms.empty()) {
    spec.algorithms.clear();
    for (const auto& a : o.algorithms) spec.algorithms.push_back(sim::parse_algorithm(a));
  }
  const auto rows = sim::sweep(spec, profile, c);
  if (o.output == "json") {
    emit(o, out, [&](std::ostream& s) {
      s << sim::sweep_to_json(spec.parameter, rows).dump(2) << '\n';
    });
  } else {
    emit(o, out, [&](std::ostream& s) { sim::write_sweep_csv(s, spec.parameter, rows); });
  }
  return kOk;
}

inline int cmd_perturb(const Options& o, std::ostream& out, const Logger& log) {
  const PlantConfig c = load_valid_config(o, log);
  const auto profile = sim::load_profile(o.profile_path);
  std::vector<sim::Parameter> params;
  for (const auto& p : o.parameters) params.push_back(sim::parse_parameter(p));
  if (params.empty()) params.assign(std::begin(sim::kAllParameters), std::end(sim::kAllParameters));
  const std::vector<double> factors =
      o.factors.empty() ? std::vector<double>{-0.5, 0.5} : o.factors;
  std::vector<economics::PerturbationResult> rows;
  for (auto p : params) {
    for (double f : factors) {
      rows.push_back(economics::perturbation_decomposition(c, profile, p, f));
    }
  }
  if (o.output == "json") {
    emit(o, out, [&](std::ostream& s) {
      s << sim::perturbation_to_json(rows).dump(2) << '\n';
    });
  } else {
    emit(o, out, [&](std::ostream& s) { sim::write_perturbation_csv(s, rows); });
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, const Logger& log) {
  const PlantConfig c = load_valid_config(o, log);
  oracle::GridOptions grid;
  grid.resolution = o.resolution;
  int failures = 0;
  out << "g,engine_profit,regions_profit,grid_profit,grid_epsilon,status\n";
  for (int i = 0; i < o.steps; ++i) {
    const double g = o.steps == 1 ? 0.0 : o.g_max * i / (o.steps - 1);
    const auto r = oracle::compare(g, c, grid);
    const bool ok = r.ok(o.tolerance);
    failures += ok ? 0 : 1;
    out << fixed4(g) << ',' << fixed4(r.engine_profit) << ',' << fixed4(r.regions_profit)
        << ',' << fixed4(r.grid_profit) << ',' << fixed4(r.grid_epsilon) << ','
        << (ok ? "ok" : "MISMATCH") << '\n';
    log.debug("g=" + sim::full_precision(g) + " regions_gap=" +
              sim::full_precision(r.regions_gap()) +
              " grid_excess=" + sim::full_precision(r.grid_excess()));
  }
  out << (failures == 0 ? "all " + std::to_string(o.steps) + " points agree\n"
                        : std::to_string(failures) + " of " + std::to_string(o.steps) +
                              " points disagree\n");
  return failures == 0 ? kOk : kDiscrepancy;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Water-electricity dispatch for a thermal + RO desalination plant"};
  app.name("wdp");
  app.require_subcommand(1);

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "plant config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--profile", o.profile_path, "renewable profile (CSV)")
        ->required()
        ->check(CLI::ExistingFile);
  };
  const std::vector<std::string> algorithm_names{"optimal", "max-rodp", "passive-tdp"};

  auto* thresholds = app.add_subcommand("thresholds", "print breakpoints, setpoints and tariff regime");
  add_config(thresholds);
  thresholds->add_option("--output", o.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* dispatch = app.add_subcommand("dispatch", "optimal dispatch and profit for one interval");
  add_config(dispatch);
  dispatch->add_option("--g", o.g, "renewable output (MWh)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  dispatch->add_option("--algorithm", o.algorithm)->check(CLI::IsMember(algorithm_names));
  dispatch->add_option("--output", o.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* simulate = app.add_subcommand("simulate", "dispatch every interval of a profile");
  add_config(simulate);
  add_profile(simulate);
  simulate->add_option("--algorithm", o.algorithm)->check(CLI::IsMember(algorithm_names));
  simulate->add_option("--output", o.output, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  simulate->add_option("--out", o.out_path, "write to this file instead of stdout");

  auto* sweep = app.add_subcommand("sweep", "daily profit over a grid of one parameter");
  add_config(sweep);
  add_profile(sweep);
  sweep->add_option("--param", o.parameter, "pi_plus, pi_minus, pi_w, alpha_r, alpha_h, beta_h")
      ->required();
  sweep->add_option("--values", o.values, "comma-separated grid")
      ->required()
      ->delimiter(',');
  sweep->add_option("--algorithm", o.algorithms, "repeatable; default optimal")
      ->check(CLI::IsMember(algorithm_names));
  sweep->add_option("--output", o.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", o.out_path, "write to this file instead of stdout");

  auto* perturb = app.add_subcommand("perturb", "profit change from scaling parameters");
  add_config(perturb);
  add_profile(perturb);
  perturb->add_option("--param", o.parameters, "repeatable; default all six")->delimiter(',');
  perturb->add_option("--factor", o.factors, "relative change, default -0.5,0.5")
      ->delimiter(',');
  perturb->add_option("--output", o.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  perturb->add_option("--out", o.out_path, "write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "check the engine against both oracles");
  add_config(verify);
  verify->add_option("--g-max", o.g_max, "largest renewable output (MWh)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--steps", o.steps, "number of g points")->check(CLI::PositiveNumber);
  verify->add_option("--resolution", o.resolution, "grid intervals per axis")
      ->check(CLI::Range(100, 100000));
  verify->add_option("--tolerance", o.tolerance, "relative profit tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  // Formats that only make sense per subcommand.
  if (o.output == "text" && (sweep->parsed() || perturb->parsed())) o.output = "csv";

  const detail::Logger log(err, log_level());
  try {
    if (thresholds->parsed()) return detail::cmd_thresholds(o, out, log);
    if (dispatch->parsed()) return detail::cmd_dispatch(o, out, log);
    if (simulate->parsed()) return detail::cmd_simulate(o, out, log);
    if (sweep->parsed()) return detail::cmd_sweep(o, out, log);
    if (perturb->parsed()) return detail::cmd_perturb(o, out, log);
    if (verify->parsed()) return detail::cmd_verify(o, out, log);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const io::ConfigError& e) {
    err << "error: config: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const sim::ProfileError& e) {
    err << "error: profile: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const economics::PerturbationInfeasible& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace wdp::cli
