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

#ifndef QTB_MODEL_HPP
#define QTB_MODEL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtb/tensor.hpp"

namespace qtb {

struct Reservoir {
  std::string id;
  double beta = 1.0;  // inverse temperature, must be > 0
  double mu = 0.0;    // chemical potential
};

/// One jump operator, stored pre-embedded in the full space. delta_s is the
/// environment entropy increment of the jump (k_B = 1). reverse_id names the
/// local-detailed-balance partner and is empty for unpaired channels.
struct JumpChannel {
  std::string id;
  int subsystem = 0;
  std::string reservoir;
  Matrix op;
  double delta_s = 0.0;
  std::string reverse_id;
};

/// Time-integrated current: per-channel real weights, implicit 0 elsewhere.
/// Weights on paired channels must satisfy c(k) = -c(k*).
struct CurrentSpec {
  std::string name;
  std::map<std::string, double> weights;
};

class LindbladModel {
 public:
  LindbladModel(TensorSpace space, Matrix hamiltonian, std::vector<JumpChannel> channels,
                std::vector<Reservoir> reservoirs, std::vector<CurrentSpec> currents = {});

  const TensorSpace& space() const { return space_; }
  int dim() const { return space_.total_dim(); }
  const Matrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<JumpChannel>& channels() const { return channels_; }
  const JumpChannel& channel(int k) const { return channels_.at(static_cast<std::size_t>(k)); }
  int num_channels() const { return static_cast<int>(channels_.size()); }
  const std::vector<Reservoir>& reservoirs() const { return reservoirs_; }
  const Reservoir& reservoir(const std::string& id) const;
  const std::vector<CurrentSpec>& currents() const { return currents_; }

  /// -1 when the id is unknown.
  int channel_index(const std::string& id) const;
  /// Index of the reverse partner, -1 when unpaired.
  int reverse_index(int k) const { return reverse_.at(static_cast<std::size_t>(k)); }
  /// Cached L†L.
  const Matrix& channel_q(int k) const { return q_.at(static_cast<std::size_t>(k)); }
  /// Cached drift term -iH - (1/2) Σ L†L.
  const Matrix& drift() const { return drift_; }

  std::vector<int> subsystem_channels(int subsystem) const;
  bool subsystem_fully_paired(int subsystem) const;

  /// Weight vector indexed by channel; throws on unknown channel ids.
  std::vector<double> weights_for(const CurrentSpec& current) const;

 private:
  TensorSpace space_;
  Matrix hamiltonian_;
  std::vector<JumpChannel> channels_;
  std::vector<Reservoir> reservoirs_;
  std::vector<CurrentSpec> currents_;
  std::map<std::string, int> channel_by_id_;
  std::map<std::string, int> reservoir_by_id_;
  std::vector<int> reverse_;
  std::vector<Matrix> q_;
  Matrix drift_;
};

/// Diagnostic pass over the physics constraints: Hermiticity of H, mutual
/// reverse pairing, LDB identity L = e^{Δs/2} L_rev†, Δs antisymmetry,
/// self-reverse channels with Δs != 0, current antisymmetry. Returns
/// human-readable violations; empty means valid.
std::vector<std::string> validate(const LindbladModel& model);

/// GKSL generator: -i[H,ρ] + Σ (LρL† - {L†L,ρ}/2).
Matrix generator_apply(const LindbladModel& model, const Matrix& rho);

/// Same with per-channel rate factors s_k (jump operators scaled by √s_k).
Matrix generator_apply_scaled(const LindbladModel& model, const Matrix& rho,
                              std::span<const double> scales);

/// D²×D² matrix of the generator in row-stacking vectorization.
Matrix generator_matrix(const LindbladModel& model);

}  // namespace qtb

#endif  // QTB_MODEL_HPP
