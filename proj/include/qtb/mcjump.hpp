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

#ifndef QTB_MCJUMP_HPP
#define QTB_MCJUMP_HPP

#include <cstdint>
#include <vector>

#include "qtb/model.hpp"

namespace qtb {

struct JumpRecord {
  int trajectory = 0;
  double time = 0.0;
  int channel = 0;
};

/// Ensemble statistics of one scalar per trajectory; standard errors of the
/// mean and variance estimators by jackknife over trajectories.
struct TrajectoryEstimate {
  int n_traj = 0;
  double mean = 0.0;
  double variance = 0.0;
  double std_error_mean = 0.0;
  double std_error_var = 0.0;
  std::uint64_t seed = 0;
};

TrajectoryEstimate jackknife_estimate(const std::vector<double>& samples, std::uint64_t seed);

struct SampleResult {
  TrajectoryEstimate current;
  TrajectoryEstimate activity;            // jump counts in the activity subsystem
  std::vector<JumpRecord> records;        // empty unless keep_records
  std::vector<Matrix> final_states;       // conditioned ψψ† at τ, kept on request
};

struct SampleOptions {
  int n_traj = 1000;
  std::uint64_t seed = 1;
  double dt = 1e-3;
  int activity_subsystem = 0;
  bool keep_records = false;
  bool keep_final_states = false;
};

/// First-order quantum-jump unraveling: between jumps the pure state is
/// propagated with H_eff = H - (i/2) Σ L†L and renormalized; channel k
/// fires in [t,t+dt) with probability ⟨L†L⟩ dt. The total per-step jump
/// probability must stay below 0.05 or the run aborts. Mixed initial
/// states are sampled from their eigendecomposition. Trajectory i draws
/// from an RNG stream derived from (seed, i), so results are bit-identical
/// regardless of thread scheduling.
SampleResult sample_current(const LindbladModel& model, const Matrix& rho0, double tau,
                            const CurrentSpec& current, const SampleOptions& options);

/// Per-trajectory jump counts restricted to one subsystem's channels.
TrajectoryEstimate activity_estimate(const std::vector<JumpRecord>& records,
                                     const LindbladModel& model, int subsystem, int n_traj,
                                     std::uint64_t seed);

}  // namespace qtb

#endif  // QTB_MCJUMP_HPP
