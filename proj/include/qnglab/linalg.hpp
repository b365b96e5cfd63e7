// Copyright 2026 The qnglab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QNGLAB_LINALG_HPP
#define QNGLAB_LINALG_HPP

#include <cmath>
#include <string>
#include <utility>

#include "qnglab/errors.hpp"
#include "qnglab/types.hpp"

namespace qnglab {

inline constexpr double kHermitianTol = 1e-10;

// Eigenvalues ascending, eigenvectors the matching columns of a unitary.
template <typename Scalar = double>
struct SpectralDecomposition {
  RealVector<Scalar> eigenvalues;
  ComplexMatrix<Scalar> eigenvectors;

  Eigen::Index dim() const { return eigenvalues.size(); }

  ComplexMatrix<Scalar> reconstruct() const {
    return eigenvectors *
           eigenvalues.template cast<std::complex<Scalar>>().asDiagonal() *
           eigenvectors.adjoint();
  }
};

template <typename Scalar>
bool is_hermitian(const ComplexMatrix<Scalar>& m, Scalar tol = Scalar(kHermitianTol)) {
  if (m.rows() != m.cols()) return false;
  const Scalar scale = std::max(Scalar(1), m.norm());
  return (m - m.adjoint()).norm() <= tol * scale;
}

// Spectral decomposition of a Hermitian matrix. The input is symmetrized as
// (M + M^dag)/2 to absorb roundoff before the solve.
template <typename Scalar = double>
SpectralDecomposition<Scalar> hermitian_eig(const ComplexMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("hermitian_eig: matrix must be square");
  }
  if (!is_hermitian(m)) {
    throw NotHermitianError("hermitian_eig: matrix is not Hermitian within tolerance");
  }
  const ComplexMatrix<Scalar> h = Scalar(0.5) * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// sum_i phi(p_i) |psi_i><psi_i| for a real scalar function phi.
template <typename Scalar, typename Func>
ComplexMatrix<Scalar> spectral_apply(const SpectralDecomposition<Scalar>& spec, Func&& phi) {
  RealVector<Scalar> mapped(spec.dim());
  for (Eigen::Index i = 0; i < spec.dim(); ++i) {
    mapped[i] = phi(spec.eigenvalues[i]);
    if (!std::isfinite(mapped[i])) {
      throw DomainError("spectral_apply: eigenvalue " + std::to_string(spec.eigenvalues[i]) +
                        " is outside the domain of the scalar function");
    }
  }
  return spec.eigenvectors *
         mapped.template cast<std::complex<Scalar>>().asDiagonal() *
         spec.eigenvectors.adjoint();
}

template <typename Scalar, typename Func>
ComplexMatrix<Scalar> spectral_apply(const ComplexMatrix<Scalar>& m, Func&& phi) {
  return spectral_apply(hermitian_eig(m), std::forward<Func>(phi));
}

// Tr[A^dag B]; real and nonnegative for A = B.
template <typename Scalar>
std::complex<Scalar> frobenius_inner(const ComplexMatrix<Scalar>& a, const ComplexMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatchError("frobenius_inner: operand shapes differ");
  }
  return a.conjugate().cwiseProduct(b).sum();
}

}  // namespace qnglab

#endif  // QNGLAB_LINALG_HPP
