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

#include "qtb/random_models.hpp"

#include <random>

namespace qtb {

Matrix random_complex_matrix(std::uint64_t seed, int rows, int cols) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

Matrix random_hermitian(std::uint64_t seed, int dim) {
  Matrix m = random_complex_matrix(seed, dim, dim);
  return 0.5 * (m + m.adjoint()).eval();
}

Matrix random_density_matrix(std::uint64_t seed, int dim) {
  Matrix g = random_complex_matrix(seed, dim, dim);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

RandomModel random_lindblad_model(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::vector<int>> spaces = {{2}, {3}, {4}, {2, 2}, {2, 3}, {6}, {5}};
  std::uniform_int_distribution<std::size_t> pick_space(0, spaces.size() - 1);
  TensorSpace space(spaces[pick_space(rng)]);
  const int dim = space.total_dim();

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Matrix h = 0.7 * random_hermitian(rng(), dim);

  std::vector<Reservoir> reservoirs = {{"bath", 1.0, 0.0}};
  std::vector<JumpChannel> channels;
  CurrentSpec current{"J", {}};
  int pair_id = 0;
  int target = 0;
  for (int sub = 0; sub < space.num_subsystems(); ++sub) {
    const int pairs = 1 + static_cast<int>(unif(rng) < 0.5);
    for (int p = 0; p < pairs; ++p) {
      const double ds = -2.0 + 4.0 * unif(rng);
      Matrix local = 0.6 * random_complex_matrix(rng(), space.dim(sub), space.dim(sub));
      Matrix fwd = embed_local(local, sub, space);
      const std::string fwd_id = "ch" + std::to_string(pair_id) + "_f";
      const std::string rev_id = "ch" + std::to_string(pair_id) + "_r";
      channels.push_back({fwd_id, sub, "bath", fwd, ds, rev_id});
      channels.push_back({rev_id, sub, "bath", std::exp(-0.5 * ds) * fwd.adjoint(), -ds, fwd_id});
      if (pair_id == 0) {
        current.weights[fwd_id] = 1.0;
        current.weights[rev_id] = -1.0;
        target = sub;
      }
      ++pair_id;
    }
  }
  LindbladModel model(space, h, std::move(channels), std::move(reservoirs), {current});
  return {std::move(model), std::move(current), target};
}

}  // namespace qtb
