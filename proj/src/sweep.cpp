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

#include "qtb/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qtb/auxiliary.hpp"
#include "qtb/bounds.hpp"
#include "qtb/mcjump.hpp"
#include "qtb/parallel.hpp"

namespace qtb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw std::invalid_argument(where + ": unknown key '" + key + "'");
  }
}

/// Net-count current for one forward/backward channel pair.
CurrentSpec pair_current(const LindbladModel& model, int k) {
  const int rev = model.reverse_index(k);
  CurrentSpec c;
  c.name = "pair_" + model.channel(k).id;
  c.weights[model.channel(k).id] = 1.0;
  c.weights[model.channel(rev).id] = -1.0;
  return c;
}

/// Entropy-flow current of a subsystem: c_k = -Δs_k, time-antisymmetric by
/// local detailed balance. Its mean is -τ Σ̇ at stationarity.
CurrentSpec entropy_flow_current(const LindbladModel& model, int subsystem) {
  CurrentSpec c;
  c.name = "sigma_flow";
  for (int k : model.subsystem_channels(subsystem))
    c.weights[model.channel(k).id] = -model.channel(k).delta_s;
  return c;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

}  // namespace

SweepRow::SweepRow()
    : j_mean(kNaN), j_var(kNaN), rel_fluct(kNaN), sigma1_dot(kNaN), i1_dot(kNaN),
      s1tot_dot(kNaN), sigma1(kNaN), i1(kNaN), delta_s1_tot(kNaN), a1(kNaN), delta(kNaN),
      delta_prime(kNaN), qfi(kNaN), f1(kNaN), f1_prime(kNaN), tkur(kNaN), tur(kNaN),
      coherence(kNaN), eta(kNaN), fano_inv(kNaN), sigma_tick(kNaN), multidim_lhs(kNaN),
      multidim_rhs(kNaN) {}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns = {
      "axis",     "j_mean",     "j_var",       "rel_fluct", "sigma1_dot", "i1_dot",
      "s1tot_dot", "Sigma1",    "I1",          "DeltaS1tot", "A1",        "delta",
      "delta_prime", "qfi",     "f1",          "f1_prime",  "tkur_rhs",  "tur_rhs",
      "coherence", "eta",       "fano_inv",    "sigma_tick", "multidim_lhs",
      "multidim_rhs", "flags"};
  return columns;
}

SweepConfig sweep_config_from_json(const Json& j, const std::filesystem::path& base_dir) {
  check_keys(j,
             {"family", "model_file", "params", "axis", "values", "tau", "dt", "outputs",
              "options"},
             "sweep config");
  SweepConfig config;
  config.family = j.value("family", std::string());
  if (j.contains("model_file")) {
    std::filesystem::path p = j.at("model_file").get<std::string>();
    config.model_file = p.is_absolute() ? p : base_dir / p;
  }
  if (config.family.empty() == config.model_file.empty())
    throw std::invalid_argument("sweep config: exactly one of family or model_file required");
  config.params = j.value("params", Json::object());
  config.axis = j.value("axis", std::string());

  if (!j.contains("values")) throw std::invalid_argument("sweep config: values missing");
  const Json& values = j.at("values");
  if (values.is_array()) {
    config.values = values.get<std::vector<double>>();
  } else if (values.is_object()) {
    check_keys(values, {"start", "stop", "count"}, "sweep values");
    const double start = values.at("start").get<double>();
    const double stop = values.at("stop").get<double>();
    const int count = values.at("count").get<int>();
    if (count < 1) throw std::invalid_argument("sweep config: values.count must be >= 1");
    for (int i = 0; i < count; ++i)
      config.values.push_back(count == 1 ? start
                                         : start + (stop - start) * i / (count - 1.0));
  } else {
    throw std::invalid_argument("sweep config: values must be a list or {start,stop,count}");
  }
  if (config.values.empty()) throw std::invalid_argument("sweep config: values list is empty");
  for (double v : config.values)
    if (!std::isfinite(v)) throw std::invalid_argument("sweep config: values must be finite");

  config.tau = j.value("tau", config.tau);
  config.dt = j.value("dt", config.dt);
  if (!(config.tau > 0.0)) throw std::invalid_argument("sweep config: tau must be positive");
  grid_steps(config.tau, config.dt);  // validates the grid

  if (j.contains("outputs")) config.outputs = j.at("outputs").get<std::vector<std::string>>();
  for (const std::string& name : config.outputs) {
    const auto& cols = sweep_columns();
    if (std::find(cols.begin(), cols.end(), name) == cols.end())
      throw std::invalid_argument("sweep config: unknown output column " + name);
  }

  if (j.contains("options")) {
    const Json& opt = j.at("options");
    check_keys(opt, {"multidim", "mc_check", "finite_theta_check"}, "sweep options");
    config.options.multidim = opt.value("multidim", false);
    if (opt.contains("mc_check") && !opt.at("mc_check").is_null()) {
      const Json& mc = opt.at("mc_check");
      check_keys(mc, {"n_traj", "seed", "dt"}, "mc_check");
      McOptions m;
      m.n_traj = mc.at("n_traj").get<int>();
      m.seed = mc.value("seed", 1ull);
      m.dt = mc.value("dt", 0.0);
      config.options.mc_check = m;
    }
    if (opt.contains("finite_theta_check") && !opt.at("finite_theta_check").is_null())
      config.options.finite_theta_check = opt.at("finite_theta_check").get<double>();
  }
  return config;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("config parse error in " + path.string() + ": " + e.what());
  }
  return sweep_config_from_json(j, path.parent_path());
}

BuiltModel build_family_model(const SweepConfig& config, double axis_value) {
  if (config.family == "demon") {
    DemonParams p = demon_params_from_json(config.params);
    if (!config.axis.empty()) p = demon_with_axis(p, config.axis, axis_value);
    return build_demon(p);
  }
  if (config.family == "clock") {
    ClockParams p = clock_params_from_json(config.params);
    if (!config.axis.empty()) p = clock_with_axis(p, config.axis, axis_value);
    return build_clock(p);
  }
  if (!config.family.empty())
    throw std::invalid_argument("unknown family " + config.family);
  if (!config.axis.empty())
    throw std::invalid_argument("model_file sweeps do not support parameter axes");
  return load_model_any(config.model_file);
}

SweepRow evaluate_sweep_point(const SweepConfig& config, double axis_value, int point_index) {
  SweepRow row;
  row.axis = axis_value;
  try {
    BuiltModel built = build_family_model(config, axis_value);
    const LindbladModel& model = built.model;
    const int target = built.target_subsystem;
    const CurrentSpec& j1 = built.current;
    const double tau = config.tau;
    const double dt = config.dt;

    SteadyStateResult steady = steady_state(model);
    const Matrix& rho_ss = steady.state;

    ThermoRates rates = rates_at(model, rho_ss);
    row.sigma1_dot = rates.sigma_dot[static_cast<std::size_t>(target)];
    row.i1_dot = rates.i_dot[static_cast<std::size_t>(target)];
    row.s1tot_dot = rates.s_dot_tot[static_cast<std::size_t>(target)];
    row.coherence = coherence_offdiag_sq(rho_ss);

    StateTrajectory traj = evolve(model, rho_ss, tau, dt);
    ThermoAccumulants acc = accumulate(model, traj, target);
    row.sigma1 = acc.sigma1;
    row.i1 = acc.i1;
    row.delta_s1_tot = acc.delta_s1_tot;
    row.a1 = acc.a1;

    EllSchedule ells = ell_schedule(model, traj, target);
    ResponseTrajectory phi = solve_phi(model, traj, ells);
    CorrectionResult corr = correction_and_qfi(model, traj, phi, ells, j1);
    row.delta = corr.delta;
    row.delta_prime = corr.delta_prime;
    row.qfi = corr.qfi;

    // FCS pass: the studied current, the entropy-flow current for the
    // engine trade-off, then the complete pair basis when requested.
    std::vector<CurrentSpec> currents = {j1, entropy_flow_current(model, target)};
    std::vector<int> basis_channels;
    if (config.options.multidim) {
      for (int k : model.subsystem_channels(target)) {
        const int rev = model.reverse_index(k);
        if (rev > k) basis_channels.push_back(k);
      }
      for (int k : basis_channels) currents.push_back(pair_current(model, k));
    }
    CumulantResult cum = finite_time_cumulants(model, currents, rho_ss, tau, dt);
    row.j_mean = cum.means[0];
    row.j_var = cum.covariance(0, 0);

    // The hierarchy mean and the rate quadrature must agree; a mismatch
    // points at a grid or weight inconsistency.
    if (std::abs(row.j_mean - corr.j_avg) >
        1e-6 * std::max({std::abs(row.j_mean), std::abs(corr.j_avg), 1e-3})) {
      row.flags.push_back("mean-mismatch");
      row.ok = false;
    }

    BoundReport report = make_bound_report(row.j_mean, row.j_var, corr.delta, acc);
    row.rel_fluct = report.rel_fluct;
    row.tkur = report.tkur;
    row.tur = report.tur;
    row.f1 = report.f1;
    row.f1_prime = report.f1_prime;

    if (report.vacuous_equilibrium) {
      row.flags.push_back("vacuous-equilibrium");
    } else {
      if (!(row.rel_fluct >= row.tkur - kBoundSlack)) {
        row.flags.push_back("tkur-violated");
        row.ok = false;
      }
      if (!(row.rel_fluct >= row.tur - kBoundSlack)) {
        row.flags.push_back("tur-violated");
        row.ok = false;
      }
      if (!(row.tkur >= row.tur - kBoundSlack)) {
        row.flags.push_back("tkur-below-tur");
        row.ok = false;
      }
      if (!(row.f1 >= 2.0 - kBoundSlack)) {
        row.flags.push_back("f1-below-2");
        row.ok = false;
      }
      const double sensitivity = corr.j_avg + corr.j_phi;
      if (!(row.j_var * row.qfi >= sensitivity * sensitivity * (1.0 - 1e-7))) {
        row.flags.push_back("cramer-rao-violated");
        row.ok = false;
      }
      double fisher_ub = std::numeric_limits<double>::infinity();
      if (acc.delta_s1_tot > 1e-12) {
        const double f = f_inverse(acc.delta_s1_tot / (2.0 * acc.a1));
        fisher_ub = acc.delta_s1_tot * acc.delta_s1_tot / (4.0 * acc.a1 * f * f);
      }
      if (!(row.qfi <= fisher_ub + kBoundSlack)) {
        row.flags.push_back("fisher-chain-violated");
        row.ok = false;
      }
    }

    // Engine metrics with the entropy-flow current.
    const double mean_s = cum.means[1];
    const double var_s = cum.covariance(1, 1);
    if (mean_s != 0.0) {
      const double delta_s = phi_current_mean(model, phi, currents[1], dt) / mean_s;
      EngineMetrics engine = engine_metrics(rates.sigma_dot[static_cast<std::size_t>(target)],
                                            rates.i_dot[static_cast<std::size_t>(target)],
                                            mean_s, var_s, delta_s);
      if (engine.applicable) row.eta = engine.eta;
    }

    if (!report.vacuous_equilibrium) {
      ClockMetrics clock = clock_metrics(row.j_mean, row.j_var, acc.delta_s1_tot, corr.delta);
      if (clock.applicable) {
        row.fano_inv = clock.fano_inverse;
        row.sigma_tick = clock.sigma_tick;
      }
    }

    if (config.options.multidim && !basis_channels.empty()) {
      const auto nb = basis_channels.size();
      CumulantResult sub;
      sub.means.assign(cum.means.begin() + 2, cum.means.end());
      sub.covariance = cum.covariance.bottomRightCorner(static_cast<Eigen::Index>(nb),
                                                        static_cast<Eigen::Index>(nb));
      std::vector<double> phi_means;
      for (std::size_t b = 0; b < nb; ++b)
        phi_means.push_back(phi_current_mean(model, phi, currents[2 + b], dt));
      MultiCurrentReport multi = multidim_tkur(sub, phi_means, acc.delta_s1_tot, acc.a1);
      row.multidim_lhs = multi.lhs;
      row.multidim_rhs = multi.rhs;
      if (multi.pseudo_inverse) row.flags.push_back("xi-pinv");
      if (!(multi.lhs <= multi.rhs + kBoundSlack)) {
        row.flags.push_back("multidim-violated");
        row.ok = false;
      }
      for (std::size_t b = 0; b < nb; ++b) {
        const double var_b = sub.covariance(static_cast<Eigen::Index>(b),
                                            static_cast<Eigen::Index>(b));
        if (var_b <= 0.0) continue;
        const double single = multi.jvec(static_cast<Eigen::Index>(b)) *
                              multi.jvec(static_cast<Eigen::Index>(b)) / var_b;
        if (!(multi.lhs >= single - kBoundSlack)) {
          row.flags.push_back("multidim-not-optimal");
          row.ok = false;
        }
      }
    }

    if (config.options.mc_check) {
      McOptions mc = *config.options.mc_check;
      SampleOptions opts;
      opts.n_traj = mc.n_traj;
      opts.seed = mc.seed + static_cast<std::uint64_t>(point_index);
      opts.dt = mc.dt > 0.0 ? mc.dt : dt;
      opts.activity_subsystem = target;
      SampleResult sample = sample_current(model, rho_ss, tau, j1, opts);
      const bool mean_ok =
          std::abs(sample.current.mean - row.j_mean) <= 3.0 * sample.current.std_error_mean;
      const bool var_ok =
          std::abs(sample.current.variance - row.j_var) <= 3.0 * sample.current.std_error_var;
      const bool act_ok =
          std::abs(sample.activity.mean - acc.a1) <= 3.0 * sample.activity.std_error_mean;
      if (!(mean_ok && var_ok && act_ok)) {
        row.flags.push_back("mc-outside-3sigma");
        row.ok = false;
      }
    }

    if (config.options.finite_theta_check) {
      const double theta = *config.options.finite_theta_check;
      const double deviation = finite_theta_check(model, rho_ss, tau, dt, j1, theta, target);
      if (!(deviation <= 1e-3)) {
        row.flags.push_back("finite-theta-mismatch");
        row.ok = false;
      }
    }
  } catch (const std::exception& e) {
    row.flags.push_back(std::string("error:") + e.what());
    row.ok = false;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  std::vector<SweepRow> rows(config.values.size());
  parallel_for(static_cast<int>(config.values.size()), [&](int i) {
    rows[static_cast<std::size_t>(i)] =
        evaluate_sweep_point(config, config.values[static_cast<std::size_t>(i)], i);
  });
  return rows;
}

void write_csv(const SweepConfig& config, const std::vector<SweepRow>& rows, std::ostream& out) {
  const auto& all = sweep_columns();
  std::vector<std::string> cols;
  if (config.outputs.empty()) {
    cols = all;
  } else {
    cols.push_back("axis");
    for (const std::string& c : all)
      if (c != "axis" &&
          std::find(config.outputs.begin(), config.outputs.end(), c) != config.outputs.end())
        cols.push_back(c);
  }

  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";

  for (const SweepRow& row : rows) {
    auto value_of = [&row](const std::string& name) -> double {
      if (name == "axis") return row.axis;
      if (name == "j_mean") return row.j_mean;
      if (name == "j_var") return row.j_var;
      if (name == "rel_fluct") return row.rel_fluct;
      if (name == "sigma1_dot") return row.sigma1_dot;
      if (name == "i1_dot") return row.i1_dot;
      if (name == "s1tot_dot") return row.s1tot_dot;
      if (name == "Sigma1") return row.sigma1;
      if (name == "I1") return row.i1;
      if (name == "DeltaS1tot") return row.delta_s1_tot;
      if (name == "A1") return row.a1;
      if (name == "delta") return row.delta;
      if (name == "delta_prime") return row.delta_prime;
      if (name == "qfi") return row.qfi;
      if (name == "f1") return row.f1;
      if (name == "f1_prime") return row.f1_prime;
      if (name == "tkur_rhs") return row.tkur;
      if (name == "tur_rhs") return row.tur;
      if (name == "coherence") return row.coherence;
      if (name == "eta") return row.eta;
      if (name == "fano_inv") return row.fano_inv;
      if (name == "sigma_tick") return row.sigma_tick;
      if (name == "multidim_lhs") return row.multidim_lhs;
      if (name == "multidim_rhs") return row.multidim_rhs;
      throw std::logic_error("unknown column " + name);
    };
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out << ",";
      if (cols[i] == "flags") {
        for (std::size_t f = 0; f < row.flags.size(); ++f)
          out << (f ? ";" : "") << row.flags[f];
      } else {
        out << format_value(value_of(cols[i]));
      }
    }
    out << "\n";
  }
}

}  // namespace qtb
