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

#ifndef QTB_PROPAGATE_HPP
#define QTB_PROPAGATE_HPP

#include <functional>
#include <span>
#include <vector>

#include "qtb/model.hpp"

namespace qtb {

/// ρ_t on a uniform grid 0..τ with step dt.
struct StateTrajectory {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<Matrix> states;

  const Matrix& front() const { return states.front(); }
  const Matrix& back() const { return states.back(); }
  int num_points() const { return static_cast<int>(states.size()); }
};

struct SteadyStateResult {
  Matrix state;
  double residual = 0.0;  // ‖L(ρss)‖_F
};

/// Number of RK4 steps for the grid [0,τ]; throws unless dt divides τ.
int grid_steps(double tau, double dt);

/// Throws unless ρ is Hermitian (1e-9), unit trace (1e-8) and PSD (-1e-8).
void require_density_matrix(const Matrix& rho);

/// Classical fixed-step RK4 on the master equation. Signals instability
/// when the trace drifts by more than 1e-5.
StateTrajectory evolve(const LindbladModel& model, const Matrix& rho0, double tau, double dt);

/// In-place RK4 on a block of coupled operator ODEs dy/dt = f(t, y).
/// Used by the counting-statistics hierarchy and the response equation.
using BlockDeriv = std::function<void(double, const std::vector<Matrix>&, std::vector<Matrix>&)>;
void rk4_step(const BlockDeriv& f, double t, double dt, std::vector<Matrix>& y);

/// Solves [generator_matrix; vec(I)†] vec(ρ) = [0; 1] in least squares and
/// Hermitizes the result. Requires a unique zero mode of the generator
/// (second-smallest singular value > 1e-8).
SteadyStateResult steady_state(const LindbladModel& model);

/// ‖L(π)‖_F, used to certify equilibrium points.
double gibbs_check(const LindbladModel& model, const Matrix& pi);

/// Composite Simpson on a uniform grid; odd interval counts are closed
/// with a 3/8 tail.
double simpson(std::span<const double> values, double dt);

}  // namespace qtb

#endif  // QTB_PROPAGATE_HPP
