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

#ifndef QTB_TENSOR_HPP
#define QTB_TENSOR_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qtb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Eigenvalues below this floor are treated as exact zeros in all
/// logarithmic sums (0 ln 0 = 0 convention).
inline constexpr double kLogFloor = 1e-14;

/// Tensor-factored Hilbert space: an ordered list of subsystem dimensions.
class TensorSpace {
 public:
  explicit TensorSpace(std::vector<int> dims);

  int num_subsystems() const { return static_cast<int>(dims_.size()); }
  int dim(int i) const { return dims_.at(static_cast<std::size_t>(i)); }
  int total_dim() const { return total_dim_; }
  const std::vector<int>& dims() const { return dims_; }

  bool operator==(const TensorSpace& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  int total_dim_;
};

/// Kronecker product, row-index-major on both factors.
Matrix kron(const Matrix& a, const Matrix& b);

/// I ⊗ ... ⊗ op ⊗ ... ⊗ I with op placed in the given slot.
Matrix embed_local(const Matrix& op, int slot, const TensorSpace& space);

/// Reduced matrix of subsystem `keep`, all other factors traced out.
Matrix partial_trace(const Matrix& m, const TensorSpace& space, int keep);

/// Spectral decomposition of a Hermitian matrix, eigenvalues descending,
/// eigenvector columns orthonormal.
struct HermitianSpectrum {
  Eigen::VectorXd values;
  Matrix vectors;
};

HermitianSpectrum hermitian_spectrum(const Matrix& a);

/// ln ρ restricted to the support: Σ_{p>floor} ln(p) |n⟩⟨n|.
/// Rejects states with an eigenvalue below -1e-8.
Matrix log_on_support(const Matrix& rho, double floor = kLogFloor);

/// Von Neumann entropy -Σ p ln p with the same support floor.
double von_neumann_entropy(const Matrix& rho, double floor = kLogFloor);

/// Row-stacking vectorization: |A⟩⟩ = Σ_{mn} a_{mn} |m⟩⊗|n⟩, so that
/// vec(AB) = (A⊗I)vec(B) and vec(BA) = (I⊗Aᵀ)vec(B).
Vector vectorize(const Matrix& m);
Matrix devectorize(const Vector& v);

/// tr(AB) without forming the product.
Complex trace_prod(const Matrix& a, const Matrix& b);

}  // namespace qtb

#endif  // QTB_TENSOR_HPP
