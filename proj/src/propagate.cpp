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

#include "qtb/propagate.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace qtb {

int grid_steps(double tau, double dt) {
  if (!(tau > 0.0) || !(dt > 0.0) || dt > tau * (1.0 + 1e-12))
    throw std::invalid_argument("grid_steps: require 0 < dt <= tau");
  const auto n = static_cast<int>(std::llround(tau / dt));
  if (n < 1 || std::abs(n * dt - tau) > 1e-9 * std::max(1.0, tau))
    throw std::invalid_argument("grid_steps: dt must divide tau");
  return n;
}

void require_density_matrix(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("state must be square");
  double scale = std::max(1.0, rho.norm());
  if ((rho - rho.adjoint()).norm() > 1e-9 * scale)
    throw std::invalid_argument("state is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
    throw std::invalid_argument("state is not normalized");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw std::invalid_argument("state has a negative eigenvalue");
}

void rk4_step(const BlockDeriv& f, double t, double dt, std::vector<Matrix>& y) {
  const std::size_t n = y.size();
  std::vector<Matrix> k1(n), k2(n), k3(n), k4(n), tmp(n);
  f(t, y, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
  f(t + 0.5 * dt, tmp, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
  f(t + 0.5 * dt, tmp, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
  f(t + dt, tmp, k4);
  for (std::size_t i = 0; i < n; ++i)
    y[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

StateTrajectory evolve(const LindbladModel& model, const Matrix& rho0, double tau, double dt) {
  require_density_matrix(rho0);
  if (rho0.rows() != model.dim())
    throw std::invalid_argument("evolve: state does not match model dimension");
  const int n = grid_steps(tau, dt);

  StateTrajectory traj;
  traj.dt = dt;
  traj.times.reserve(static_cast<std::size_t>(n) + 1);
  traj.states.reserve(static_cast<std::size_t>(n) + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);

  std::vector<Matrix> y{rho0};
  BlockDeriv f = [&model](double, const std::vector<Matrix>& in, std::vector<Matrix>& out) {
    out[0] = generator_apply(model, in[0]);
  };
  for (int i = 0; i < n; ++i) {
    rk4_step(f, i * dt, dt, y);
    if (std::abs(y[0].trace().real() - 1.0) > 1e-5)
      throw std::runtime_error("evolve: trace drift detected, step too large");
    traj.times.push_back((i + 1) * dt);
    traj.states.push_back(y[0]);
  }
  return traj;
}

SteadyStateResult steady_state(const LindbladModel& model) {
  const int d = model.dim();
  const int d2 = d * d;
  Matrix gen = generator_matrix(model);

  Eigen::BDCSVD<Matrix> svd(gen);
  const auto& sv = svd.singularValues();
  if (sv(d2 - 2) <= 1e-8)
    throw std::runtime_error("steady_state: stationary state is not unique");

  Matrix a(d2 + 1, d2);
  a.topRows(d2) = gen;
  a.row(d2) = vectorize(Matrix::Identity(d, d)).adjoint();
  Vector b = Vector::Zero(d2 + 1);
  b(d2) = 1.0;

  Vector x = a.colPivHouseholderQr().solve(b);
  Matrix rho = devectorize(x);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();

  SteadyStateResult result;
  result.state = rho;
  result.residual = generator_apply(model, rho).norm();
  if (result.residual > 1e-10)
    throw std::runtime_error("steady_state: residual above tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::runtime_error("steady_state: solution is not positive semidefinite");
  return result;
}

double gibbs_check(const LindbladModel& model, const Matrix& pi) {
  require_density_matrix(pi);
  return generator_apply(model, pi).norm();
}

double simpson(std::span<const double> values, double dt) {
  const auto np = values.size();
  if (np < 2) return 0.0;
  std::size_t n = np - 1;  // interval count
  double sum = 0.0;
  std::size_t limit = n;
  if (n % 2 != 0) {
    if (n < 3) return 0.5 * dt * (values[0] + values[1]);
    limit = n - 3;
    // Simpson 3/8 on the last three intervals.
    sum += 3.0 * dt / 8.0 *
           (values[n - 3] + 3.0 * values[n - 2] + 3.0 * values[n - 1] + values[n]);
  }
  for (std::size_t i = 0; i + 2 <= limit; i += 2)
    sum += dt / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
  return sum;
}

}  // namespace qtb
