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

#include "qtb/tensor.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qtb {

TensorSpace::TensorSpace(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("TensorSpace: empty dimension list");
  total_dim_ = 1;
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("TensorSpace: subsystem dimensions must be >= 2");
    total_dim_ *= d;
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed_local(const Matrix& op, int slot, const TensorSpace& space) {
  if (slot < 0 || slot >= space.num_subsystems())
    throw std::invalid_argument("embed_local: subsystem index out of range");
  if (op.rows() != op.cols() || op.rows() != space.dim(slot))
    throw std::invalid_argument("embed_local: operator dimension does not match subsystem");
  int before = 1, after = 1;
  for (int i = 0; i < slot; ++i) before *= space.dim(i);
  for (int i = slot + 1; i < space.num_subsystems(); ++i) after *= space.dim(i);
  Matrix left = kron(Matrix::Identity(before, before), op);
  return kron(left, Matrix::Identity(after, after));
}

Matrix partial_trace(const Matrix& m, const TensorSpace& space, int keep) {
  const int total = space.total_dim();
  if (m.rows() != total || m.cols() != total)
    throw std::invalid_argument("partial_trace: matrix does not match space");
  if (keep < 0 || keep >= space.num_subsystems())
    throw std::invalid_argument("partial_trace: subsystem index out of range");
  int before = 1, after = 1;
  for (int i = 0; i < keep; ++i) before *= space.dim(i);
  for (int i = keep + 1; i < space.num_subsystems(); ++i) after *= space.dim(i);
  const int d = space.dim(keep);
  Matrix out = Matrix::Zero(d, d);
  for (int b = 0; b < before; ++b)
    for (int s = 0; s < d; ++s)
      for (int sp = 0; sp < d; ++sp)
        for (int a = 0; a < after; ++a)
          out(s, sp) += m((b * d + s) * after + a, (b * d + sp) * after + a);
  return out;
}

HermitianSpectrum hermitianSpectrumImpl(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_spectrum: eigensolver failed");
  HermitianSpectrum s;
  s.values = solver.eigenvalues().reverse();
  s.vectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

HermitianSpectrum hermitian_spectrum(const Matrix& a) { return hermitianSpectrumImpl(a); }

Matrix log_on_support(const Matrix& rho, double floor) {
  HermitianSpectrum s = hermitian_spectrum(rho);
  if (s.values.minCoeff() < -1e-8)
    throw std::domain_error("log_on_support: state has a significantly negative eigenvalue");
  const int n = static_cast<int>(s.values.size());
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (s.values(i) > floor)
      out += std::log(s.values(i)) * (s.vectors.col(i) * s.vectors.col(i).adjoint());
  }
  return out;
}

double von_neumann_entropy(const Matrix& rho, double floor) {
  HermitianSpectrum s = hermitian_spectrum(rho);
  if (s.values.minCoeff() < -1e-8)
    throw std::domain_error("von_neumann_entropy: state has a significantly negative eigenvalue");
  double sum = 0.0;
  for (int i = 0; i < s.values.size(); ++i)
    if (s.values(i) > floor) sum -= s.values(i) * std::log(s.values(i));
  return sum;
}

Vector vectorize(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("vectorize: matrix must be square");
  const Eigen::Index d = m.rows();
  Vector v(d * d);
  for (Eigen::Index i = 0; i < d; ++i) v.segment(i * d, d) = m.row(i).transpose();
  return v;
}

Matrix devectorize(const Vector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size()) throw std::invalid_argument("devectorize: length is not a perfect square");
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m.row(i) = v.segment(i * d, d).transpose();
  return m;
}

Complex trace_prod(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw std::invalid_argument("trace_prod: incompatible shapes");
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace qtb
