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

#ifndef QNGLAB_STATES_HPP
#define QNGLAB_STATES_HPP

#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <utility>

#include "qnglab/errors.hpp"
#include "qnglab/linalg.hpp"
#include "qnglab/types.hpp"

namespace qnglab {

// Hermitian, PSD, unit-trace matrix with its spectral decomposition computed
// eagerly at construction (values are immutable afterwards, so shared use
// across threads is safe).
class DensityOperator {
 public:
  explicit DensityOperator(const MatrixC& matrix) {
    if (matrix.rows() != matrix.cols()) {
      throw InvalidStateError("DensityOperator: matrix must be square");
    }
    if (!is_hermitian(matrix)) {
      throw InvalidStateError("DensityOperator: matrix is not Hermitian within tolerance");
    }
    matrix_ = 0.5 * (matrix + matrix.adjoint().eval());
    if (std::abs(matrix_.trace().real() - 1.0) > 1e-10 || std::abs(matrix_.trace().imag()) > 1e-10) {
      throw InvalidStateError("DensityOperator: trace must equal 1");
    }
    spectral_ = hermitian_eig(matrix_);
    if (spectral_.eigenvalues.minCoeff() < -1e-10) {
      throw InvalidStateError("DensityOperator: matrix is not positive semidefinite");
    }
  }

  Eigen::Index dim() const { return matrix_.rows(); }
  const MatrixC& matrix() const { return matrix_; }
  const SpectralDecomposition<double>& spectral() const { return spectral_; }
  const VectorR& eigenvalues() const { return spectral_.eigenvalues; }
  double min_eigenvalue() const { return spectral_.eigenvalues.minCoeff(); }

 private:
  MatrixC matrix_;
  SpectralDecomposition<double> spectral_;
};

// (1 - delta) rho + (delta/N) I; floors the spectrum at delta/N.
inline DensityOperator mix_with_identity(const DensityOperator& rho, double delta) {
  if (!(delta >= 0.0) || delta >= 1.0) {
    throw InvalidParameterError("mix_with_identity: delta must lie in [0, 1)");
  }
  if (delta == 0.0) return rho;
  const auto n = rho.dim();
  MatrixC mixed = (1.0 - delta) * rho.matrix() +
                  (delta / static_cast<double>(n)) * MatrixC::Identity(n, n);
  return DensityOperator(mixed);
}

// A parameterized map theta -> rho_theta with analytic partial derivatives.
// Implementations are immutable after construction.
class StateFamily {
 public:
  virtual ~StateFamily() = default;
  virtual int parameter_count() const = 0;
  virtual int dim() const = 0;
  virtual DensityOperator value(const VectorR& theta) const = 0;
  virtual TangentMRep partials(const VectorR& theta) const = 0;
  virtual std::string descriptor() const = 0;
};

namespace detail {

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
inline Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << std::complex<double>(0, 0), std::complex<double>(0, -1),
       std::complex<double>(0, 1), std::complex<double>(0, 0);
  return m;
}
inline Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

// exp(-i phi sigma_z / 2)
inline Eigen::Matrix2cd rotation_z(double phi) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(std::complex<double>(0, -phi / 2));
  m(1, 1) = std::exp(std::complex<double>(0, phi / 2));
  return m;
}

// exp(-i phi sigma_y / 2)
inline Eigen::Matrix2cd rotation_y(double phi) {
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

}  // namespace detail

// Single-qubit family rho_theta = U(theta) rho_ini U(theta)^dag with
// U(theta) = Rz(theta_3) Ry(theta_2) Rz(theta_1) and
// rho_ini = (I + x sx + y sy + z sz)/2. The spectrum {(1 -+ r)/2} is
// theta-independent and strictly positive for |bloch| < 1.
class RotationFamily final : public StateFamily {
 public:
  explicit RotationFamily(const Eigen::Vector3d& bloch) : bloch_(bloch) {
    if (!(bloch.squaredNorm() < 1.0)) {
      throw InvalidBlochVectorError("RotationFamily: need x^2 + y^2 + z^2 < 1");
    }
  }

  int parameter_count() const override { return 3; }
  int dim() const override { return 2; }

  DensityOperator value(const VectorR& theta) const override {
    check_theta(theta);
    const Eigen::Matrix2cd u = unitary(theta);
    return DensityOperator(u * initial_state() * u.adjoint());
  }

  TangentMRep partials(const VectorR& theta) const override {
    check_theta(theta);
    const Eigen::Matrix2cd r0 = initial_state();
    const Eigen::Matrix2cd u1 = detail::rotation_z(theta[0]);
    const Eigen::Matrix2cd u2 = detail::rotation_y(theta[1]);
    const Eigen::Matrix2cd u3 = detail::rotation_z(theta[2]);
    const std::complex<double> half_i(0, 0.5);
    const Eigen::Matrix2cd gz = -half_i * detail::pauli_z();
    const Eigen::Matrix2cd gy = -half_i * detail::pauli_y();
    const Eigen::Matrix2cd u = u3 * u2 * u1;
    const Eigen::Matrix2cd du[3] = {u3 * u2 * gz * u1, u3 * gy * u2 * u1, gz * u};
    TangentMRep out;
    out.reserve(3);
    for (const auto& d : du) {
      out.emplace_back(d * r0 * u.adjoint() + u * r0 * d.adjoint());
    }
    return out;
  }

  std::string descriptor() const override {
    return "rotation(bloch=[" + std::to_string(bloch_.x()) + "," +
           std::to_string(bloch_.y()) + "," + std::to_string(bloch_.z()) + "])";
  }

  const Eigen::Vector3d& bloch() const { return bloch_; }

 private:
  void check_theta(const VectorR& theta) const {
    if (theta.size() != 3) {
      throw DimensionMismatchError("RotationFamily: theta must have 3 entries");
    }
  }

  Eigen::Matrix2cd initial_state() const {
    return 0.5 * (Eigen::Matrix2cd::Identity() + bloch_.x() * detail::pauli_x() +
                  bloch_.y() * detail::pauli_y() + bloch_.z() * detail::pauli_z());
  }

  Eigen::Matrix2cd unitary(const VectorR& theta) const {
    return detail::rotation_z(theta[2]) * detail::rotation_y(theta[1]) *
           detail::rotation_z(theta[0]);
  }

  Eigen::Vector3d bloch_;
};

// Non-owning view of a base family with the delta-mixing applied: the value
// is (1 - delta) rho + (delta/N) I and the partials pick up the factor
// (1 - delta).
class MixedFamily final : public StateFamily {
 public:
  MixedFamily(const StateFamily& base, double delta) : base_(&base), delta_(delta) {
    if (!(delta >= 0.0) || delta >= 1.0) {
      throw InvalidParameterError("MixedFamily: delta must lie in [0, 1)");
    }
  }

  int parameter_count() const override { return base_->parameter_count(); }
  int dim() const override { return base_->dim(); }

  DensityOperator value(const VectorR& theta) const override {
    return mix_with_identity(base_->value(theta), delta_);
  }

  TangentMRep partials(const VectorR& theta) const override {
    TangentMRep parts = base_->partials(theta);
    if (delta_ != 0.0) {
      for (auto& p : parts) p *= (1.0 - delta_);
    }
    return parts;
  }

  std::string descriptor() const override {
    return base_->descriptor() + "+mix(delta=" + std::to_string(delta_) + ")";
  }

 private:
  const StateFamily* base_;
  double delta_;
};

// L = Tr[(rho - target)^dag (rho - target)], the squared Frobenius distance.
inline double cost_value(const DensityOperator& rho, const DensityOperator& target) {
  if (rho.dim() != target.dim()) {
    throw DimensionMismatchError("cost_value: state dimensions differ");
  }
  return (rho.matrix() - target.matrix()).squaredNorm();
}

// d_k L = 2 Re Tr[(d_k rho)(rho - target)]
inline VectorR cost_gradient(const TangentMRep& partials, const DensityOperator& rho,
                             const DensityOperator& target) {
  const MatrixC diff = rho.matrix() - target.matrix();
  VectorR grad(static_cast<Eigen::Index>(partials.size()));
  for (size_t k = 0; k < partials.size(); ++k) {
    grad[static_cast<Eigen::Index>(k)] = 2.0 * frobenius_inner(partials[k], diff).real();
  }
  return grad;
}

inline double cost_value(const StateFamily& family, const DensityOperator& target,
                         const VectorR& theta) {
  return cost_value(family.value(theta), target);
}

inline VectorR cost_gradient(const StateFamily& family, const DensityOperator& target,
                             const VectorR& theta) {
  return cost_gradient(family.partials(theta), family.value(theta), target);
}

}  // namespace qnglab

#endif  // QNGLAB_STATES_HPP
