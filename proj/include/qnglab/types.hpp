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

#ifndef QNGLAB_TYPES_HPP
#define QNGLAB_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qnglab {

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixC = ComplexMatrix<double>;
using VectorC = ComplexVector<double>;
using MatrixR = RealMatrix<double>;
using VectorR = RealVector<double>;

// n x n real symmetric PSD matrix: g(d_i, d_j) in parameter coordinates.
using MetricMatrix = MatrixR;

// Per-parameter m-representations [d_1 rho, ..., d_n rho], each Hermitian
// and traceless.
using TangentMRep = std::vector<MatrixC>;

}  // namespace qnglab

#endif  // QNGLAB_TYPES_HPP
