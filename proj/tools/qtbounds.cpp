// Copyright 2026 The qtbounds Authors
//
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

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qtb/mcjump.hpp"
#include "qtb/selfcheck.hpp"
#include "qtb/sweep.hpp"

namespace {

int cmd_validate(const std::string& path) {
  qtb::BuiltModel built = qtb::load_model_any(path);
  std::vector<std::string> violations = qtb::validate(built.model);
  if (violations.empty()) {
    std::cout << "valid: " << path << " (dim " << built.model.dim() << ", "
              << built.model.num_channels() << " channels)\n";
    return 0;
  }
  for (const std::string& v : violations) std::cout << "violation: " << v << "\n";
  return 1;
}

int cmd_steady(const std::string& path) {
  qtb::BuiltModel built = qtb::load_model_any(path);
  qtb::SteadyStateResult result = qtb::steady_state(built.model);
  std::printf("residual %.3e\n", result.residual);
  std::printf("coherence %.17g\n", qtb::coherence_offdiag_sq(result.state));
  std::printf("populations");
  for (int i = 0; i < built.model.dim(); ++i)
    std::printf(" %.17g", result.state(i, i).real());
  std::printf("\n");
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& output) {
  qtb::SweepConfig config = qtb::load_sweep_config(config_path);
  std::vector<qtb::SweepRow> rows = qtb::run_sweep(config);
  if (output.empty() || output == "-") {
    qtb::write_csv(config, rows, std::cout);
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 2;
    }
    qtb::write_csv(config, rows, out);
  }
  int failures = 0;
  for (const qtb::SweepRow& row : rows)
    if (!row.ok) ++failures;
  if (failures > 0) {
    std::cerr << failures << " of " << rows.size() << " rows failed a bound check\n";
    return 1;
  }
  return 0;
}

int cmd_traj(const std::string& config_path, const std::string& records_path) {
  qtb::SweepConfig config = qtb::load_sweep_config(config_path);
  if (!config.options.mc_check) {
    std::cerr << "traj: config has no options.mc_check block\n";
    return 2;
  }
  qtb::McOptions mc = *config.options.mc_check;
  std::ofstream records;
  if (!records_path.empty()) {
    records.open(records_path);
    if (!records) {
      std::cerr << "cannot write " << records_path << "\n";
      return 2;
    }
  }
  std::cout << "axis,mc_mean,mc_se_mean,mc_var,mc_se_var,activity_mean,activity_se\n";
  for (std::size_t i = 0; i < config.values.size(); ++i) {
    const double value = config.values[i];
    qtb::BuiltModel built = qtb::build_family_model(config, value);
    qtb::Matrix rho0 = qtb::steady_state(built.model).state;
    qtb::SampleOptions opts;
    opts.n_traj = mc.n_traj;
    opts.seed = mc.seed + static_cast<std::uint64_t>(i);
    opts.dt = mc.dt > 0.0 ? mc.dt : config.dt;
    opts.activity_subsystem = built.target_subsystem;
    opts.keep_records = !records_path.empty();
    qtb::SampleResult sample =
        qtb::sample_current(built.model, rho0, config.tau, built.current, opts);
    std::printf("%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e\n", value, sample.current.mean,
                sample.current.std_error_mean, sample.current.variance,
                sample.current.std_error_var, sample.activity.mean,
                sample.activity.std_error_mean);
    for (const qtb::JumpRecord& r : sample.records)
      records << r.trajectory << "," << r.time << ","
              << built.model.channel(r.channel).id << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subsystem uncertainty-relation laboratory for open quantum systems"};
  app.require_subcommand(1);

  std::string model_path, config_path, output, records_path;

  CLI::App* validate = app.add_subcommand("validate", "check a model file");
  validate->add_option("model", model_path, "model JSON file")->required();

  CLI::App* steady = app.add_subcommand("steady", "solve the stationary state of a model file");
  steady->add_option("model", model_path, "model JSON file")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep from a config");
  sweep->add_option("config", config_path, "sweep config JSON")->required();
  sweep->add_option("-o,--output", output, "CSV output path (default stdout)");

  CLI::App* traj = app.add_subcommand("traj", "Monte Carlo trajectory estimates for a config");
  traj->add_option("config", config_path, "sweep config JSON with options.mc_check")->required();
  traj->add_option("--records", records_path, "dump jump records to this file");

  app.add_subcommand("selfcheck", "run the aggregated invariant suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(model_path);
    if (steady->parsed()) return cmd_steady(model_path);
    if (sweep->parsed()) return cmd_sweep(config_path, output);
    if (traj->parsed()) return cmd_traj(config_path, records_path);
    return qtb::print_selfcheck(std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
