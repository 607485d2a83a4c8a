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

#ifndef QTB_FCS_HPP
#define QTB_FCS_HPP

#include <span>
#include <utility>
#include <vector>

#include "qtb/propagate.hpp"

namespace qtb {

/// Finite-time means and covariance of a set of counting currents.
struct CumulantResult {
  std::vector<double> means;
  Eigen::MatrixXd covariance;
};

/// Exact moment hierarchy: the tilted generator is differentiated in the
/// counting field analytically, leaving a coupled linear system
///   ρ̇ = L(ρ)
///   σ̇ᵃ = L(σᵃ) + Σ_k cᵃ_k L_k ρ L_k†
///   σ̇ᵃᵇ = L(σᵃᵇ) + Σ_k cᵃ_k L_k σᵇ L_k† + cᵇ_k L_k σᵃ L_k† + cᵃ_k cᵇ_k L_k ρ L_k†
/// integrated with RK4; means are tr σᵃ(τ) and Ξ_ab = tr σᵃᵇ(τ) - m_a m_b.
CumulantResult finite_time_cumulants(const LindbladModel& model,
                                     std::span<const CurrentSpec> currents, const Matrix& rho0,
                                     double tau, double dt);

/// Vectorized tilted generator L̂_u = L̂ + Σ_k (e^{iuc_k}-1) L_k ⊗ L_k*.
Matrix tilted_generator_matrix(const LindbladModel& model, const CurrentSpec& current, double u);

/// Z(u) = ⟨⟨I| e^{L̂_u τ} |ρ0⟩⟩ via the matrix exponential.
Complex generating_function(const LindbladModel& model, const CurrentSpec& current,
                            const Matrix& rho0, double tau, double u);

/// Matrix-exponential oracle for (mean, variance): central differences of
/// Z at u ∈ {0, ±h, ±2h}. Kept as an independent cross-check of the
/// hierarchy; not used on any production path.
std::pair<double, double> tilted_oracle_moments(const LindbladModel& model,
                                                const CurrentSpec& current, const Matrix& rho0,
                                                double tau, double u_step = 1e-4);

}  // namespace qtb

#endif  // QTB_FCS_HPP
