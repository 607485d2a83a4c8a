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

#include "qtb/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qtb {

namespace {
const Complex kI(0.0, 1.0);
}

LindbladModel::LindbladModel(TensorSpace space, Matrix hamiltonian,
                             std::vector<JumpChannel> channels, std::vector<Reservoir> reservoirs,
                             std::vector<CurrentSpec> currents)
    : space_(std::move(space)),
      hamiltonian_(std::move(hamiltonian)),
      channels_(std::move(channels)),
      reservoirs_(std::move(reservoirs)),
      currents_(std::move(currents)) {
  const int d = space_.total_dim();
  if (hamiltonian_.rows() != d || hamiltonian_.cols() != d)
    throw std::invalid_argument("LindbladModel: Hamiltonian does not match space dimension");

  for (std::size_t i = 0; i < reservoirs_.size(); ++i) {
    if (reservoirs_[i].beta <= 0.0)
      throw std::invalid_argument("LindbladModel: reservoir beta must be positive");
    if (!reservoir_by_id_.emplace(reservoirs_[i].id, static_cast<int>(i)).second)
      throw std::invalid_argument("LindbladModel: duplicate reservoir id " + reservoirs_[i].id);
  }

  for (std::size_t k = 0; k < channels_.size(); ++k) {
    const JumpChannel& ch = channels_[k];
    if (ch.op.rows() != d || ch.op.cols() != d)
      throw std::invalid_argument("LindbladModel: channel " + ch.id + " has wrong dimension");
    if (ch.subsystem < 0 || ch.subsystem >= space_.num_subsystems())
      throw std::invalid_argument("LindbladModel: channel " + ch.id + " subsystem out of range");
    if (!reservoir_by_id_.count(ch.reservoir))
      throw std::invalid_argument("LindbladModel: channel " + ch.id + " references unknown reservoir");
    if (!channel_by_id_.emplace(ch.id, static_cast<int>(k)).second)
      throw std::invalid_argument("LindbladModel: duplicate channel id " + ch.id);
  }

  reverse_.assign(channels_.size(), -1);
  for (std::size_t k = 0; k < channels_.size(); ++k) {
    const std::string& rid = channels_[k].reverse_id;
    if (rid.empty()) continue;
    auto it = channel_by_id_.find(rid);
    if (it == channel_by_id_.end())
      throw std::invalid_argument("LindbladModel: channel " + channels_[k].id +
                                  " references unknown reverse " + rid);
    reverse_[k] = it->second;
  }
  for (std::size_t k = 0; k < channels_.size(); ++k) {
    int r = reverse_[k];
    if (r >= 0 && reverse_[static_cast<std::size_t>(r)] != static_cast<int>(k))
      throw std::invalid_argument("LindbladModel: reverse pairing of channel " + channels_[k].id +
                                  " is not mutual");
  }

  q_.reserve(channels_.size());
  Matrix qsum = Matrix::Zero(d, d);
  for (const JumpChannel& ch : channels_) {
    q_.push_back(ch.op.adjoint() * ch.op);
    qsum += q_.back();
  }
  drift_ = -kI * hamiltonian_ - 0.5 * qsum;

  for (const CurrentSpec& cur : currents_) {
    for (const auto& [id, w] : cur.weights) {
      auto it = channel_by_id_.find(id);
      if (it == channel_by_id_.end())
        throw std::invalid_argument("LindbladModel: current " + cur.name +
                                    " weights unknown channel " + id);
      int r = reverse_[static_cast<std::size_t>(it->second)];
      if (r >= 0) {
        auto rit = cur.weights.find(channels_[static_cast<std::size_t>(r)].id);
        double wrev = rit == cur.weights.end() ? 0.0 : rit->second;
        if (std::abs(w + wrev) > 1e-12)
          throw std::invalid_argument("LindbladModel: current " + cur.name +
                                      " violates antisymmetry on channel " + id);
      }
    }
  }
}

const Reservoir& LindbladModel::reservoir(const std::string& id) const {
  auto it = reservoir_by_id_.find(id);
  if (it == reservoir_by_id_.end()) throw std::invalid_argument("unknown reservoir " + id);
  return reservoirs_[static_cast<std::size_t>(it->second)];
}

int LindbladModel::channel_index(const std::string& id) const {
  auto it = channel_by_id_.find(id);
  return it == channel_by_id_.end() ? -1 : it->second;
}

std::vector<int> LindbladModel::subsystem_channels(int subsystem) const {
  std::vector<int> out;
  for (int k = 0; k < num_channels(); ++k)
    if (channels_[static_cast<std::size_t>(k)].subsystem == subsystem) out.push_back(k);
  return out;
}

bool LindbladModel::subsystem_fully_paired(int subsystem) const {
  for (int k : subsystem_channels(subsystem))
    if (reverse_index(k) < 0) return false;
  return true;
}

std::vector<double> LindbladModel::weights_for(const CurrentSpec& current) const {
  std::vector<double> w(static_cast<std::size_t>(num_channels()), 0.0);
  for (const auto& [id, c] : current.weights) {
    int k = channel_index(id);
    if (k < 0)
      throw std::invalid_argument("current " + current.name + " weights unknown channel " + id);
    w[static_cast<std::size_t>(k)] = c;
  }
  return w;
}

std::vector<std::string> validate(const LindbladModel& model) {
  std::vector<std::string> violations;
  auto report = [&violations](const std::string& msg) { violations.push_back(msg); };

  const Matrix& h = model.hamiltonian();
  double hscale = std::max(1.0, h.norm());
  if ((h - h.adjoint()).norm() > 1e-10 * hscale)
    report("Hamiltonian is not Hermitian");

  for (int k = 0; k < model.num_channels(); ++k) {
    const JumpChannel& ch = model.channel(k);
    int r = model.reverse_index(k);
    if (r < 0) continue;
    const JumpChannel& rev = model.channel(r);
    if (r == k && std::abs(ch.delta_s) > 1e-12)
      report("channel " + ch.id + " is its own reverse but has delta_s != 0");
    if (std::abs(ch.delta_s + rev.delta_s) > 1e-12)
      report("channel pair (" + ch.id + ", " + rev.id + ") violates delta_s antisymmetry");
    double scale = ch.op.norm();
    double resid = (ch.op - std::exp(0.5 * ch.delta_s) * rev.op.adjoint()).norm();
    if (resid > 1e-10 * std::max(scale, 1e-300))
      report("channel pair (" + ch.id + ", " + rev.id + ") violates local detailed balance");
  }

  for (const CurrentSpec& cur : model.currents()) {
    for (const auto& [id, w] : cur.weights) {
      int k = model.channel_index(id);
      if (k < 0) {
        report("current " + cur.name + " weights unknown channel " + id);
        continue;
      }
      int r = model.reverse_index(k);
      if (r < 0) continue;
      auto rit = cur.weights.find(model.channel(r).id);
      double wrev = rit == cur.weights.end() ? 0.0 : rit->second;
      if (std::abs(w + wrev) > 1e-12)
        report("current " + cur.name + " violates antisymmetry on channel " + id);
    }
  }
  return violations;
}

Matrix generator_apply(const LindbladModel& model, const Matrix& rho) {
  if (rho.rows() != model.dim() || rho.cols() != model.dim())
    throw std::invalid_argument("generator_apply: state does not match model dimension");
  Matrix out = model.drift() * rho + rho * model.drift().adjoint();
  for (int k = 0; k < model.num_channels(); ++k) {
    const Matrix& l = model.channel(k).op;
    out += l * rho * l.adjoint();
  }
  return out;
}

Matrix generator_apply_scaled(const LindbladModel& model, const Matrix& rho,
                              std::span<const double> scales) {
  if (static_cast<int>(scales.size()) != model.num_channels())
    throw std::invalid_argument("generator_apply_scaled: one scale per channel required");
  Matrix a = -kI * model.hamiltonian();
  for (int k = 0; k < model.num_channels(); ++k)
    a -= 0.5 * scales[static_cast<std::size_t>(k)] * model.channel_q(k);
  Matrix out = a * rho + rho * a.adjoint();
  for (int k = 0; k < model.num_channels(); ++k) {
    const Matrix& l = model.channel(k).op;
    out += scales[static_cast<std::size_t>(k)] * (l * rho * l.adjoint());
  }
  return out;
}

Matrix generator_matrix(const LindbladModel& model) {
  const int d = model.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix& h = model.hamiltonian();
  Matrix s = -kI * (kron(h, id) - kron(id, h.transpose()));
  for (int k = 0; k < model.num_channels(); ++k) {
    const Matrix& l = model.channel(k).op;
    const Matrix& q = model.channel_q(k);
    s += kron(l, l.conjugate());
    s -= 0.5 * kron(q, id);
    s -= 0.5 * kron(id, q.transpose());
  }
  return s;
}

}  // namespace qtb
