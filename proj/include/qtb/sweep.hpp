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

#ifndef QTB_SWEEP_HPP
#define QTB_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qtb/model_io.hpp"

namespace qtb {

struct McOptions {
  int n_traj = 10000;
  std::uint64_t seed = 1;
  double dt = 0.0;  // 0 = use the sweep dt
};

struct SweepOptions {
  bool multidim = false;
  std::optional<McOptions> mc_check;
  std::optional<double> finite_theta_check;
};

struct SweepConfig {
  std::string family;                 // "demon", "clock", or empty for model_file
  std::filesystem::path model_file;
  Json params;                        // family parameter overrides
  std::string axis;
  std::vector<double> values;
  double tau = 10.0;
  double dt = 1e-3;
  std::vector<std::string> outputs;   // column subset; empty = all
  SweepOptions options;
};

SweepConfig sweep_config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// One evaluated sweep point. Values that are not applicable stay NaN.
struct SweepRow {
  double axis = 0.0;
  double j_mean, j_var, rel_fluct;
  double sigma1_dot, i1_dot, s1tot_dot;
  double sigma1, i1, delta_s1_tot, a1;
  double delta, delta_prime, qfi;
  double f1, f1_prime, tkur, tur;
  double coherence;
  double eta, fano_inv, sigma_tick;
  double multidim_lhs, multidim_rhs;
  std::vector<std::string> flags;
  bool ok = true;  // all applicable bound checks passed (or vacuous)

  SweepRow();
};

/// Canonical CSV column names in order (axis first, flags last).
const std::vector<std::string>& sweep_columns();

BuiltModel build_family_model(const SweepConfig& config, double axis_value);

SweepRow evaluate_sweep_point(const SweepConfig& config, double axis_value, int point_index);

/// Evaluates all axis values on a work pool; row order follows the axis.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// 17-significant-digit CSV; nan spelled "nan", infinities "inf"/"-inf".
void write_csv(const SweepConfig& config, const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace qtb

#endif  // QTB_SWEEP_HPP
