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

#include "qtb/auxiliary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qtb {

namespace {

double ell_value(double rate_fwd, double rate_rev) {
  const double sum = rate_fwd + rate_rev;
  if (sum < 1e-14) return 0.0;  // inert channel, any finite value would do
  return (rate_fwd - rate_rev) / sum;
}

std::vector<double> ells_at(const LindbladModel& model, const std::vector<int>& channels,
                            const Matrix& rho) {
  std::vector<double> out(channels.size(), 0.0);
  for (std::size_t c = 0; c < channels.size(); ++c) {
    const int k = channels[c];
    const int rev = model.reverse_index(k);
    const double rf = trace_prod(model.channel_q(k), rho).real();
    const double rb = trace_prod(model.channel_q(rev), rho).real();
    out[c] = ell_value(rf, rb);
  }
  return out;
}

void check_grid(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("time grids are not aligned");
}

}  // namespace

int EllSchedule::column_of(int channel_index) const {
  auto it = std::find(channel_indices.begin(), channel_indices.end(), channel_index);
  return it == channel_indices.end() ? -1
                                     : static_cast<int>(it - channel_indices.begin());
}

EllSchedule ell_schedule(const LindbladModel& model, const StateTrajectory& traj, int subsystem) {
  if (!model.subsystem_fully_paired(subsystem))
    throw std::invalid_argument("ell_schedule: subsystem has unpaired channels");
  EllSchedule sched;
  sched.subsystem = subsystem;
  sched.times = traj.times;
  sched.channel_indices = model.subsystem_channels(subsystem);
  const auto nt = traj.states.size();
  const auto nc = sched.channel_indices.size();
  sched.ell.resize(static_cast<Eigen::Index>(nt), static_cast<Eigen::Index>(nc));
  for (std::size_t t = 0; t < nt; ++t) {
    std::vector<double> row = ells_at(model, sched.channel_indices, traj.states[t]);
    for (std::size_t c = 0; c < nc; ++c)
      sched.ell(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(c)) = row[c];
  }
  return sched;
}

ResponseTrajectory solve_phi(const LindbladModel& model, const StateTrajectory& traj,
                             const EllSchedule& ells) {
  check_grid(traj.times, ells.times);
  const int d = model.dim();
  const auto& channels = ells.channel_indices;

  ResponseTrajectory out;
  out.times = traj.times;
  out.phi.reserve(traj.states.size());
  out.phi.push_back(Matrix::Zero(d, d));

  // The pair (ρ, φ) is a closed ODE system: ℓ depends on ρ only, so the
  // RK4 stages evaluate the source at the concurrent unperturbed state
  // instead of interpolating a frozen schedule.
  std::vector<Matrix> y{traj.states.front(), Matrix::Zero(d, d)};
  BlockDeriv f = [&](double, const std::vector<Matrix>& in, std::vector<Matrix>& deriv) {
    const Matrix& rho = in[0];
    const Matrix& phi = in[1];
    deriv[0] = generator_apply(model, rho);
    deriv[1] = generator_apply(model, phi);
    std::vector<double> ls = ells_at(model, channels, rho);
    for (std::size_t c = 0; c < channels.size(); ++c) {
      if (ls[c] == 0.0) continue;
      const int k = channels[c];
      const Matrix& l = model.channel(k).op;
      const Matrix& q = model.channel_q(k);
      deriv[1] += ls[c] * (l * rho * l.adjoint() - 0.5 * (q * rho + rho * q));
    }
  };
  const double dt = traj.dt;
  for (std::size_t i = 0; i + 1 < traj.states.size(); ++i) {
    rk4_step(f, static_cast<double>(i) * dt, dt, y);
    if (std::abs(y[1].trace()) > 1e-9)
      throw std::runtime_error("solve_phi: response operator gained a trace");
    out.phi.push_back(y[1]);
  }
  return out;
}

CorrectionResult correction_and_qfi(const LindbladModel& model, const StateTrajectory& traj,
                                    const ResponseTrajectory& phi, const EllSchedule& ells,
                                    const CurrentSpec& current) {
  check_grid(traj.times, phi.times);
  check_grid(traj.times, ells.times);
  const std::vector<double> w = model.weights_for(current);
  for (int k = 0; k < model.num_channels(); ++k) {
    if (w[static_cast<std::size_t>(k)] != 0.0 && ells.column_of(k) < 0)
      throw std::invalid_argument("correction_and_qfi: current weights channel " +
                                  model.channel(k).id + " outside the perturbed subsystem");
  }

  const auto nt = traj.states.size();
  std::vector<double> f_avg(nt), f_phi(nt), f_qfi(nt), f_diff(nt), f_star(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    const Matrix& rho = traj.states[t];
    const Matrix& ph = phi.phi[t];
    double avg = 0.0, fphi = 0.0, qfi = 0.0, diff = 0.0, star = 0.0;
    for (std::size_t c = 0; c < ells.channel_indices.size(); ++c) {
      const int k = ells.channel_indices[c];
      const double ell = ells.ell(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(c));
      const double rate = trace_prod(model.channel_q(k), rho).real();
      qfi += ell * ell * rate;
      const double c_k = w[static_cast<std::size_t>(k)];
      if (c_k == 0.0) continue;
      avg += c_k * rate;
      fphi += c_k * trace_prod(model.channel_q(k), ph).real();
      const double quadrature = 2.0 * model.channel(k).op.cwiseProduct(rho.transpose())
                                          .sum().real();  // tr[(L+L†)ρ]
      diff += c_k * quadrature;
      star += c_k * (0.5 * ell - 1.0) * quadrature;
    }
    f_avg[t] = avg;
    f_phi[t] = fphi;
    f_qfi[t] = qfi;
    f_diff[t] = diff;
    f_star[t] = star;
  }

  CorrectionResult result;
  result.j_avg = simpson(f_avg, traj.dt);
  result.j_phi = simpson(f_phi, traj.dt);
  result.qfi = simpson(f_qfi, traj.dt);
  result.j_diff = simpson(f_diff, traj.dt);
  result.j_star = simpson(f_star, traj.dt);
  result.delta_defined = result.j_avg != 0.0;
  result.delta = result.delta_defined ? result.j_phi / result.j_avg
                                      : std::numeric_limits<double>::quiet_NaN();
  result.delta_prime_defined = result.j_diff != 0.0;
  result.delta_prime = result.delta_prime_defined
                           ? (result.j_star + result.j_phi) / result.j_diff
                           : std::numeric_limits<double>::quiet_NaN();
  return result;
}

double phi_current_mean(const LindbladModel& model, const ResponseTrajectory& phi,
                        const CurrentSpec& current, double dt) {
  const std::vector<double> w = model.weights_for(current);
  std::vector<double> integrand(phi.phi.size(), 0.0);
  for (std::size_t t = 0; t < phi.phi.size(); ++t) {
    double sum = 0.0;
    for (int k = 0; k < model.num_channels(); ++k) {
      const double c_k = w[static_cast<std::size_t>(k)];
      if (c_k != 0.0) sum += c_k * trace_prod(model.channel_q(k), phi.phi[t]).real();
    }
    integrand[t] = sum;
  }
  return simpson(integrand, dt);
}

double finite_theta_check(const LindbladModel& model, const Matrix& rho0, double tau, double dt,
                          const CurrentSpec& current, double theta, int subsystem) {
  if (std::abs(theta) > 1e-3)
    throw std::invalid_argument("finite_theta_check: |theta| must be <= 1e-3");

  const StateTrajectory traj = evolve(model, rho0, tau, dt);
  const EllSchedule ells = ell_schedule(model, traj, subsystem);
  const ResponseTrajectory phi = solve_phi(model, traj, ells);
  const CorrectionResult corr = correction_and_qfi(model, traj, phi, ells, current);
  const double reference = corr.j_avg + corr.j_phi;

  const std::vector<double> w = model.weights_for(current);
  const int nch = model.num_channels();
  const auto n_rows = static_cast<int>(ells.times.size());

  auto scales_at = [&](double t, double th, std::vector<double>& s) {
    std::fill(s.begin(), s.end(), 1.0);
    double pos = t / dt;
    int idx = std::clamp(static_cast<int>(pos), 0, n_rows - 2);
    double frac = std::clamp(pos - idx, 0.0, 1.0);
    for (std::size_t c = 0; c < ells.channel_indices.size(); ++c) {
      const double ell = (1.0 - frac) * ells.ell(idx, static_cast<Eigen::Index>(c)) +
                         frac * ells.ell(idx + 1, static_cast<Eigen::Index>(c));
      s[static_cast<std::size_t>(ells.channel_indices[c])] = 1.0 + ell * th;
    }
  };

  auto perturbed_mean = [&](double th) {
    std::vector<Matrix> y{rho0, Matrix::Zero(model.dim(), model.dim())};
    std::vector<double> s(static_cast<std::size_t>(nch), 1.0);
    BlockDeriv f = [&](double t, const std::vector<Matrix>& in, std::vector<Matrix>& deriv) {
      scales_at(t, th, s);
      deriv[0] = generator_apply_scaled(model, in[0], s);
      deriv[1] = generator_apply_scaled(model, in[1], s);
      for (int k = 0; k < nch; ++k) {
        const double c_k = w[static_cast<std::size_t>(k)];
        if (c_k == 0.0) continue;
        const Matrix& l = model.channel(k).op;
        deriv[1] += c_k * s[static_cast<std::size_t>(k)] * (l * in[0] * l.adjoint());
      }
    };
    const int n_steps = grid_steps(tau, dt);
    for (int i = 0; i < n_steps; ++i) rk4_step(f, i * dt, dt, y);
    return y[1].trace().real();
  };

  const double numeric = (perturbed_mean(theta) - perturbed_mean(-theta)) / (2.0 * theta);
  return std::abs(numeric - reference) / std::max(std::abs(reference), 1e-300);
}

}  // namespace qtb
