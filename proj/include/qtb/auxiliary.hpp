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

#ifndef QTB_AUXILIARY_HPP
#define QTB_AUXILIARY_HPP

#include <vector>

#include "qtb/propagate.hpp"

namespace qtb {

/// ℓ coefficients of the θ-perturbed dynamics along the unperturbed ρ_t,
/// for the channels of one subsystem:
/// ℓ_k = (r_k - r_{k*})/(r_k + r_{k*}), r_k = tr(LρL†); 0 when both rates
/// vanish. Columns follow channel_indices.
struct EllSchedule {
  int subsystem = 0;
  std::vector<double> times;
  std::vector<int> channel_indices;
  Eigen::MatrixXd ell;  // (num times) × (num channels)

  int column_of(int channel_index) const;
};

EllSchedule ell_schedule(const LindbladModel& model, const StateTrajectory& traj, int subsystem);

/// First-order response of the state to the perturbation:
/// φ̇ = L(φ) + Σ_k ℓ_k(t) D[L_k] ρ_t, φ_0 = 0. Traceless at all times.
struct ResponseTrajectory {
  std::vector<double> times;
  std::vector<Matrix> phi;
};

ResponseTrajectory solve_phi(const LindbladModel& model, const StateTrajectory& traj,
                             const EllSchedule& ells);

struct CorrectionResult {
  double j_avg = 0.0;      // ⟨J⟩ under jump unraveling
  double j_phi = 0.0;      // ⟨J⟩_φ
  double delta = 0.0;      // ⟨J⟩_φ / ⟨J⟩
  bool delta_defined = false;
  double qfi = 0.0;        // I_0 = ∫ Σ ℓ² tr(LρL†)
  double j_diff = 0.0;     // diffusion-unraveling mean ∫ Σ c tr[(L+L†)ρ]
  double j_star = 0.0;     // ∫ Σ c (ℓ/2 - 1) tr[(L+L†)ρ]
  double delta_prime = 0.0;  // (⟨J⟩_* + ⟨J⟩_φ)/⟨J⟩ for the diffusion current
  bool delta_prime_defined = false;
};

CorrectionResult correction_and_qfi(const LindbladModel& model, const StateTrajectory& traj,
                                    const ResponseTrajectory& phi, const EllSchedule& ells,
                                    const CurrentSpec& current);

/// ⟨J⟩_φ alone for an additional current sharing the same φ.
double phi_current_mean(const LindbladModel& model, const ResponseTrajectory& phi,
                        const CurrentSpec& current, double dt);

/// Central-difference validation of ∂_θ⟨J⟩|₀ = ⟨J⟩ + ⟨J⟩_φ: propagates the
/// dynamics with channel rates scaled by 1 + ℓ(t)θ (frozen schedule, linear
/// interpolation between grid points) and returns the relative deviation.
double finite_theta_check(const LindbladModel& model, const Matrix& rho0, double tau, double dt,
                          const CurrentSpec& current, double theta, int subsystem);

}  // namespace qtb

#endif  // QTB_AUXILIARY_HPP
