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

#include "qtb/mcjump.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qtb/parallel.hpp"
#include "qtb/propagate.hpp"

namespace qtb {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::mt19937_64 trajectory_rng(std::uint64_t seed, int trajectory) {
  return std::mt19937_64(
      splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trajectory) + 1)));
}

}  // namespace

TrajectoryEstimate jackknife_estimate(const std::vector<double>& samples, std::uint64_t seed) {
  const auto n = static_cast<int>(samples.size());
  if (n < 2) throw std::invalid_argument("jackknife_estimate: need at least two trajectories");
  double s1 = 0.0, s2 = 0.0;
  for (double x : samples) {
    s1 += x;
    s2 += x * x;
  }
  const double mean = s1 / n;
  const double ss = s2 - n * mean * mean;
  const double variance = ss / (n - 1);

  // Jackknife over leave-one-out estimates for both the mean and the
  // unbiased variance estimator.
  double mean_dev2 = 0.0;
  std::vector<double> var_loo(samples.size());
  double var_loo_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = samples[static_cast<std::size_t>(i)];
    const double mean_i = (s1 - x) / (n - 1);
    mean_dev2 += (mean_i - mean) * (mean_i - mean);
    const double ss_i = s2 - x * x - (n - 1) * mean_i * mean_i;
    var_loo[static_cast<std::size_t>(i)] = ss_i / (n - 2);
    var_loo_sum += var_loo[static_cast<std::size_t>(i)];
  }
  const double var_loo_mean = var_loo_sum / n;
  double var_dev2 = 0.0;
  for (double v : var_loo) var_dev2 += (v - var_loo_mean) * (v - var_loo_mean);

  TrajectoryEstimate est;
  est.n_traj = n;
  est.seed = seed;
  est.mean = mean;
  est.variance = variance;
  est.std_error_mean = std::sqrt((n - 1.0) / n * mean_dev2);
  est.std_error_var = std::sqrt((n - 1.0) / n * var_dev2);
  return est;
}

SampleResult sample_current(const LindbladModel& model, const Matrix& rho0, double tau,
                            const CurrentSpec& current, const SampleOptions& options) {
  require_density_matrix(rho0);
  if (options.n_traj < 2) throw std::invalid_argument("sample_current: n_traj must be >= 2");
  const int n_steps = grid_steps(tau, options.dt);
  const double dt = options.dt;
  const int d = model.dim();
  const int nch = model.num_channels();
  const std::vector<double> weights = model.weights_for(current);

  std::vector<bool> counts_activity(static_cast<std::size_t>(nch), false);
  for (int k = 0; k < nch; ++k)
    counts_activity[static_cast<std::size_t>(k)] =
        model.channel(k).subsystem == options.activity_subsystem;

  Matrix q_total = Matrix::Zero(d, d);
  for (int k = 0; k < nch; ++k) q_total += model.channel_q(k);
  // dψ/dt = -iH_eff ψ with H_eff = H - (i/2) Σ L†L.
  const Matrix drift = Complex(0.0, -1.0) * model.hamiltonian() - 0.5 * q_total;

  HermitianSpectrum init = hermitian_spectrum(rho0);
  std::vector<double> init_cdf;
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    acc += std::max(init.values(i), 0.0);
    init_cdf.push_back(acc);
  }

  std::vector<double> currents(static_cast<std::size_t>(options.n_traj), 0.0);
  std::vector<double> activity(static_cast<std::size_t>(options.n_traj), 0.0);
  std::vector<std::vector<JumpRecord>> records(static_cast<std::size_t>(options.n_traj));
  std::vector<Matrix> finals;
  if (options.keep_final_states)
    finals.assign(static_cast<std::size_t>(options.n_traj), Matrix());

  parallel_for(options.n_traj, [&](int traj) {
    std::mt19937_64 rng = trajectory_rng(options.seed, traj);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // Draw the initial pure state from the spectral weights of ρ0.
    const double pick = unif(rng) * acc;
    int mode = 0;
    while (mode + 1 < d && init_cdf[static_cast<std::size_t>(mode)] < pick) ++mode;
    Vector psi = init.vectors.col(mode);

    double j_total = 0.0, a_total = 0.0;
    Vector k1(d), k2(d), k3(d), k4(d), tmp(d);
    for (int step = 0; step < n_steps; ++step) {
      const double total_rate = psi.dot(q_total * psi).real();
      const double p_jump = total_rate * dt;
      if (p_jump > 0.05)
        throw std::runtime_error("sample_current: per-step jump probability above 0.05");
      const double u = unif(rng);
      if (u < p_jump) {
        double target = (u / p_jump) * total_rate;
        double cum = 0.0;
        int chosen = nch - 1;
        for (int k = 0; k < nch; ++k) {
          cum += psi.dot(model.channel_q(k) * psi).real();
          if (cum >= target) {
            chosen = k;
            break;
          }
        }
        psi = model.channel(chosen).op * psi;
        psi.normalize();
        j_total += weights[static_cast<std::size_t>(chosen)];
        if (counts_activity[static_cast<std::size_t>(chosen)]) a_total += 1.0;
        if (options.keep_records)
          records[static_cast<std::size_t>(traj)].push_back({traj, step * dt, chosen});
      } else {
        k1 = drift * psi;
        tmp = psi + 0.5 * dt * k1;
        k2 = drift * tmp;
        tmp = psi + 0.5 * dt * k2;
        k3 = drift * tmp;
        tmp = psi + dt * k3;
        k4 = drift * tmp;
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        psi.normalize();
      }
    }
    currents[static_cast<std::size_t>(traj)] = j_total;
    activity[static_cast<std::size_t>(traj)] = a_total;
    if (options.keep_final_states)
      finals[static_cast<std::size_t>(traj)] = psi * psi.adjoint();
  });

  SampleResult result;
  result.current = jackknife_estimate(currents, options.seed);
  result.activity = jackknife_estimate(activity, options.seed);
  if (options.keep_records) {
    for (auto& per_traj : records)
      result.records.insert(result.records.end(), per_traj.begin(), per_traj.end());
  }
  if (options.keep_final_states) result.final_states = std::move(finals);
  return result;
}

TrajectoryEstimate activity_estimate(const std::vector<JumpRecord>& records,
                                     const LindbladModel& model, int subsystem, int n_traj,
                                     std::uint64_t seed) {
  std::vector<double> counts(static_cast<std::size_t>(n_traj), 0.0);
  for (const JumpRecord& r : records) {
    if (r.trajectory < 0 || r.trajectory >= n_traj)
      throw std::invalid_argument("activity_estimate: record outside trajectory range");
    if (model.channel(r.channel).subsystem == subsystem)
      counts[static_cast<std::size_t>(r.trajectory)] += 1.0;
  }
  return jackknife_estimate(counts, seed);
}

}  // namespace qtb
