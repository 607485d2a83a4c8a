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

#ifndef QTB_RANDOM_MODELS_HPP
#define QTB_RANDOM_MODELS_HPP

#include <cstdint>

#include "qtb/model.hpp"

namespace qtb {

/// Seeded generators for randomized identity checks.

Matrix random_complex_matrix(std::uint64_t seed, int rows, int cols);
Matrix random_hermitian(std::uint64_t seed, int dim);
Matrix random_density_matrix(std::uint64_t seed, int dim);

/// Small LDB-consistent model: a random space (D <= 6), random Hermitian H,
/// one or two channel pairs per subsystem constructed as
/// L_rev = e^{-Δs/2} L† with random local L and Δs, plus a net-count
/// current on the first pair.
struct RandomModel {
  LindbladModel model;
  CurrentSpec current;
  int target_subsystem = 0;
};

RandomModel random_lindblad_model(std::uint64_t seed);

}  // namespace qtb

#endif  // QTB_RANDOM_MODELS_HPP
