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

#ifndef QTB_ZOO_HPP
#define QTB_ZOO_HPP

#include <string>
#include <utility>

#include "qtb/model.hpp"

namespace qtb {

/// Exchange-coupled double quantum dot in the strong Coulomb blockade
/// regime: three states {empty, up, down} per dot, each dot attached to two
/// fully spin-polarized leads in antiparallel configuration.
struct DemonParams {
  double beta = 0.01;
  double j_coupling = 10.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double mu_1l = 0.0;
  double mu_1r = 0.0;
  double mu_2l = -30.0;
  double mu_2r = 30.0;
  double gamma_1l_up = 1.0;
  double gamma_1l_down = 0.0;
  double gamma_1r_up = 0.0;
  double gamma_1r_down = 1.0;
  double gamma_2l_up = 0.0;
  double gamma_2l_down = 1.0;
  double gamma_2r_up = 1.0;
  double gamma_2r_down = 0.0;
};

/// Two-qubit heat engine driving a d-level ladder; ticks are the
/// reservoir-mediated resets from the top of the ladder to its ground state.
struct ClockParams {
  double beta_c = 1.0;
  double beta_h = 1e-3;
  double beta_w = 0.1;
  double e_c = 1.0;
  double e_h = 2.0;
  double e_w = 1.0;
  double g = 5.0;
  double gamma_c = 1.0;
  double gamma_h = 1.0;
  double gamma_w = 1.0;
  int d = 4;
};

struct BuiltModel {
  LindbladModel model;
  CurrentSpec current;    // the current studied in the paper's figures
  int target_subsystem;   // subsystem owning the weighted channels
};

/// Channels with zero rate are omitted; only the particle current of the
/// first dot is attached (+1 on every d†₁↑ jump, -1 on d₁↑).
BuiltModel build_demon(const DemonParams& p);

/// Requires E_h = E_c + E_w. The tick current counts +1 per σ_w† jump.
BuiltModel build_clock(const ClockParams& p);

/// π ∝ exp[-β(H₀ - Σ μ_iν n_iσ)] in the antiparallel lead assignment.
Matrix demon_gibbs_state(const DemonParams& p);

/// π ∝ exp(-β_h E_h n_h - β_c E_c n_c - β_w Σ_k k E_w n_k).
Matrix clock_gibbs_state(const ClockParams& p);

/// Closed-form parameter value on the equilibrium manifold for a sweep
/// axis; throws when the axis does not enter the balance condition.
double equilibrium_locator(const std::string& family, const std::string& axis,
                           const DemonParams& dp = {}, const ClockParams& cp = {});

/// Sweep-axis application. Demon axes: mu1L (sets mu_1r = -v), J, gamma2
/// (rescales the nonzero dot-2 rates), beta. Clock axes: beta_c, beta_h,
/// beta_w, g, gamma_w, gamma_c, gamma_h, gamma_ch (sets both).
DemonParams demon_with_axis(DemonParams p, const std::string& axis, double value);
ClockParams clock_with_axis(ClockParams p, const std::string& axis, double value);

}  // namespace qtb

#endif  // QTB_ZOO_HPP
