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

#ifndef QTB_THERMO_HPP
#define QTB_THERMO_HPP

#include <map>
#include <string>
#include <vector>

#include "qtb/propagate.hpp"

namespace qtb {

/// Instantaneous thermodynamic rates at a state ρ. Per-subsystem entries
/// are indexed like TensorSpace. s_dot_tot is evaluated from the dissipator
/// products (operator route) and cross-checked against the spectral
/// double-sum over jump matrix elements for every fully paired subsystem.
struct ThermoRates {
  std::vector<double> s_dot_tot;           // partial entropy production rates
  std::vector<double> s_dot_tot_spectral;  // NaN for unpaired subsystems
  std::vector<double> i_dot;               // information flows
  std::vector<double> sigma_dot;           // local entropy changes Ṡᵢ + Σ β Q̇
  std::vector<double> s_dot;               // subsystem entropy rates
  std::vector<double> activity;            // Σ_k tr(LρL†) per subsystem
  std::map<std::string, double> heat;      // Q̇_α per reservoir (into reservoir)
  double s_dot_global = 0.0;               // -tr(ρ̇ ln ρ)
  double s_env_dot = 0.0;                  // Σ Δs tr(LρL†)
  double s_tot_dot = 0.0;
  double i_dot_total = 0.0;
};

ThermoRates rates_at(const LindbladModel& model, const Matrix& rho);

/// Time integrals over [0,τ] for one subsystem (Simpson on the grid).
struct ThermoAccumulants {
  double delta_s1_tot = 0.0;
  double a1 = 0.0;
  double sigma1 = 0.0;
  double i1 = 0.0;
};

ThermoAccumulants accumulate(const LindbladModel& model, const StateTrajectory& traj,
                             int subsystem);

/// I_{1..M} = Σ S_i - S.
double mutual_information(const TensorSpace& space, const Matrix& rho);

/// Σ_{m≠n} |ρ_{mn}|² in the fixed product basis (the printed formula).
double coherence_offdiag_sq(const Matrix& rho);

/// Conventional l₁ variant Σ_{m≠n} |ρ_{mn}|, exposed for comparison.
double coherence_l1(const Matrix& rho);

}  // namespace qtb

#endif  // QTB_THERMO_HPP
