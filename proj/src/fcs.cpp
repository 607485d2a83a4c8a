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

#include "qtb/fcs.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace qtb {

CumulantResult finite_time_cumulants(const LindbladModel& model,
                                     std::span<const CurrentSpec> currents, const Matrix& rho0,
                                     double tau, double dt) {
  require_density_matrix(rho0);
  const int n_steps = grid_steps(tau, dt);
  const int m = static_cast<int>(currents.size());
  const int d = model.dim();
  const int nch = model.num_channels();

  std::vector<std::vector<double>> w;
  w.reserve(static_cast<std::size_t>(m));
  for (const CurrentSpec& c : currents) w.push_back(model.weights_for(c));

  // Block layout: [ρ, σ^a (m), σ^{ab} for a<=b].
  auto pair_block = [m](int a, int b) {
    if (a > b) std::swap(a, b);
    return 1 + m + a * m - a * (a - 1) / 2 + (b - a);
  };
  const int n_blocks = 1 + m + m * (m + 1) / 2;

  std::vector<Matrix> y(static_cast<std::size_t>(n_blocks), Matrix::Zero(d, d));
  y[0] = rho0;

  std::vector<Matrix> jumped(static_cast<std::size_t>(1 + m));  // L_k X L_k† per low block
  BlockDeriv f = [&](double, const std::vector<Matrix>& in, std::vector<Matrix>& out) {
    for (int b = 0; b < n_blocks; ++b) {
      const Matrix& x = in[static_cast<std::size_t>(b)];
      out[static_cast<std::size_t>(b)] = model.drift() * x + x * model.drift().adjoint();
    }
    for (int k = 0; k < nch; ++k) {
      const Matrix& l = model.channel(k).op;
      for (int b = 0; b <= m; ++b)
        jumped[static_cast<std::size_t>(b)] = l * in[static_cast<std::size_t>(b)] * l.adjoint();
      for (int b = 0; b < n_blocks; ++b) {
        if (b <= m) {
          out[static_cast<std::size_t>(b)] += jumped[static_cast<std::size_t>(b)];
        } else {
          const Matrix& x = in[static_cast<std::size_t>(b)];
          out[static_cast<std::size_t>(b)] += l * x * l.adjoint();
        }
      }
      for (int a = 0; a < m; ++a) {
        const double wa = w[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
        if (wa != 0.0) out[static_cast<std::size_t>(1 + a)] += wa * jumped[0];
        for (int b = a; b < m; ++b) {
          const double wb = w[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
          Matrix& dst = out[static_cast<std::size_t>(pair_block(a, b))];
          if (wa != 0.0) dst += wa * jumped[static_cast<std::size_t>(1 + b)];
          if (wb != 0.0) dst += wb * jumped[static_cast<std::size_t>(1 + a)];
          if (wa != 0.0 && wb != 0.0) dst += wa * wb * jumped[0];
        }
      }
    }
  };

  for (int i = 0; i < n_steps; ++i) {
    rk4_step(f, i * dt, dt, y);
    if (std::abs(y[0].trace().real() - 1.0) > 1e-5)
      throw std::runtime_error("finite_time_cumulants: trace drift detected, step too large");
  }

  CumulantResult result;
  result.means.resize(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    result.means[static_cast<std::size_t>(a)] = y[static_cast<std::size_t>(1 + a)].trace().real();
  result.covariance.resize(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      double second = y[static_cast<std::size_t>(pair_block(a, b))].trace().real();
      double cov = second - result.means[static_cast<std::size_t>(a)] *
                                result.means[static_cast<std::size_t>(b)];
      result.covariance(a, b) = cov;
      result.covariance(b, a) = cov;
    }
  return result;
}

Matrix tilted_generator_matrix(const LindbladModel& model, const CurrentSpec& current, double u) {
  Matrix s = generator_matrix(model);
  const std::vector<double> w = model.weights_for(current);
  for (int k = 0; k < model.num_channels(); ++k) {
    const double c = w[static_cast<std::size_t>(k)];
    if (c == 0.0) continue;
    const Matrix& l = model.channel(k).op;
    s += (std::exp(Complex(0.0, u * c)) - 1.0) * kron(l, l.conjugate());
  }
  return s;
}

Complex generating_function(const LindbladModel& model, const CurrentSpec& current,
                            const Matrix& rho0, double tau, double u) {
  const int d = model.dim();
  Matrix propagator = (tau * tilted_generator_matrix(model, current, u)).exp();
  Vector z = propagator * vectorize(rho0);
  return vectorize(Matrix::Identity(d, d)).dot(z);
}

std::pair<double, double> tilted_oracle_moments(const LindbladModel& model,
                                                const CurrentSpec& current, const Matrix& rho0,
                                                double tau, double u_step) {
  if (model.dim() * model.dim() > 1024)
    throw std::invalid_argument("tilted_oracle_moments: dimension too large for the oracle");
  const double h = u_step;
  const Complex zm2 = generating_function(model, current, rho0, tau, -2 * h);
  const Complex zm1 = generating_function(model, current, rho0, tau, -h);
  const Complex z0 = generating_function(model, current, rho0, tau, 0.0);
  const Complex zp1 = generating_function(model, current, rho0, tau, h);
  const Complex zp2 = generating_function(model, current, rho0, tau, 2 * h);

  // Fourth-order central stencils for Z'(0) and Z''(0).
  const Complex d1 = (-zp2 + 8.0 * zp1 - 8.0 * zm1 + zm2) / (12.0 * h);
  const Complex d2 = (-zp2 + 16.0 * zp1 - 30.0 * z0 + 16.0 * zm1 - zm2) / (12.0 * h * h);
  const double mean = (Complex(0.0, -1.0) * d1).real();
  const double second = (-d2).real();
  return {mean, second - mean * mean};
}

}  // namespace qtb
