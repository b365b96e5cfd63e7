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

#ifndef QNGLAB_METRICS_HPP
#define QNGLAB_METRICS_HPP

#include <cmath>
#include <vector>

#include "qnglab/errors.hpp"
#include "qnglab/linalg.hpp"
#include "qnglab/petz.hpp"
#include "qnglab/types.hpp"

namespace qnglab {

// States entering metric construction must be full rank at least to this
// level; delta-mixing upstream guarantees it.
inline constexpr double kMinStateEigenvalue = 1e-14;

namespace detail {

inline void check_full_rank(const SpectralDecomposition<double>& rho, const char* where) {
  if (rho.eigenvalues.minCoeff() < kMinStateEigenvalue) {
    throw SingularStateError(std::string(where) + ": state eigenvalue below 1e-14");
  }
}

// W(a, b) = 1 / (p_a f(p_b / p_a)); symmetric because f(t) = t f(1/t).
inline MatrixR metric_weights(const VectorR& p, const PetzFunction& f) {
  const Eigen::Index n = p.size();
  MatrixR w(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      w(a, b) = 1.0 / (p[a] * petz_eval(f, p[b] / p[a]));
    }
  }
  return w;
}

}  // namespace detail

// e-representation: f^{-1}(Delta_rho) applied to Xm rho^{-1}. In the
// eigenbasis the entries are <i|Xm|j> / (p_j f(p_i / p_j)).
inline MatrixC e_representation(const SpectralDecomposition<double>& rho, const MatrixC& xm,
                                const PetzFunction& f) {
  detail::check_full_rank(rho, "e_representation");
  if (xm.rows() != rho.dim() || xm.cols() != rho.dim()) {
    throw DimensionMismatchError("e_representation: operand dimension mismatch");
  }
  if (!is_hermitian(xm)) {
    throw NotHermitianError("e_representation: Xm must be Hermitian");
  }
  const VectorR& p = rho.eigenvalues;
  const MatrixC& v = rho.eigenvectors;
  MatrixC a = v.adjoint() * xm * v;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      a(i, j) /= p[j] * petz_eval(f, p[i] / p[j]);
    }
  }
  return v * a * v.adjoint();
}

// Quantum Fisher metric G_ij = Tr[Xm_i Xe_j], assembled as the eigenbasis
// double sum  G_uv = sum_{a,b} conj(Xu)_{ab} (Xv)_{ab} / (p_a f(p_b / p_a)),
// which is a Gram form: real, symmetric, PSD up to roundoff.
inline MetricMatrix quantum_fisher_metric(const SpectralDecomposition<double>& rho,
                                          const TangentMRep& partials, const PetzFunction& f) {
  detail::check_full_rank(rho, "quantum_fisher_metric");
  const Eigen::Index n = static_cast<Eigen::Index>(partials.size());
  const MatrixC& v = rho.eigenvectors;
  std::vector<MatrixC> transformed;
  transformed.reserve(partials.size());
  for (const auto& x : partials) {
    if (x.rows() != rho.dim() || x.cols() != rho.dim()) {
      throw DimensionMismatchError("quantum_fisher_metric: tangent dimension mismatch");
    }
    if (!is_hermitian(x)) {
      throw NotHermitianError("quantum_fisher_metric: tangent matrices must be Hermitian");
    }
    transformed.emplace_back(v.adjoint() * x * v);
  }
  const MatrixC w = detail::metric_weights(rho.eigenvalues, f).cast<std::complex<double>>();
  MetricMatrix g(n, n);
  double imag_residue = 0.0;
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index t = u; t < n; ++t) {
      const std::complex<double> entry =
          transformed[static_cast<size_t>(u)].conjugate()
              .cwiseProduct(transformed[static_cast<size_t>(t)])
              .cwiseProduct(w)
              .sum();
      imag_residue = std::max(imag_residue, std::abs(entry.imag()));
      g(u, t) = entry.real();
      g(t, u) = entry.real();
    }
  }
  const double scale = std::max(1.0, g.norm());
  if (imag_residue > 1e-9 * scale) {
    throw Error("quantum_fisher_metric: imaginary residue exceeds tolerance");
  }
  return g;
}

// Same metric through the literal trace form Tr[Xm_i e_rep(Xm_j)]; kept as an
// algebraically independent route for cross-checks.
inline MetricMatrix quantum_fisher_metric_via_erep(const SpectralDecomposition<double>& rho,
                                                   const TangentMRep& partials,
                                                   const PetzFunction& f) {
  const Eigen::Index n = static_cast<Eigen::Index>(partials.size());
  MetricMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const MatrixC e = e_representation(rho, partials[static_cast<size_t>(j)], f);
    for (Eigen::Index i = 0; i < n; ++i) {
      g(i, j) = frobenius_inner(partials[static_cast<size_t>(i)], e).real();
    }
  }
  return MetricMatrix(0.5 * (g + g.transpose()));
}

inline MetricMatrix diagonal_metric(const MetricMatrix& g) {
  return g.diagonal().asDiagonal();
}

// (1 - xi) G + xi I; strictly positive definite for xi > 0.
inline MetricMatrix regularize_metric(const MetricMatrix& g, double xi) {
  if (!(xi >= 0.0) || xi >= 1.0) {
    throw InvalidParameterError("regularize_metric: xi must lie in [0, 1)");
  }
  return (1.0 - xi) * g + xi * MetricMatrix::Identity(g.rows(), g.cols());
}

// G_ij = sum_x (d_i p)(x) (d_j p)(x) / p(x)
inline MetricMatrix classical_fisher_metric(const VectorR& p,
                                            const std::vector<VectorR>& partials) {
  if (p.minCoeff() <= 0.0 || std::abs(p.sum() - 1.0) > 1e-10) {
    throw InvalidDistributionError(
        "classical_fisher_metric: p must be strictly positive and sum to 1");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(partials.size());
  for (const auto& dp : partials) {
    if (dp.size() != p.size()) {
      throw InvalidDistributionError("classical_fisher_metric: partial has wrong length");
    }
    if (std::abs(dp.sum()) > 1e-10) {
      throw InvalidDistributionError("classical_fisher_metric: partials must sum to 0");
    }
  }
  MetricMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double entry = (partials[static_cast<size_t>(i)].cwiseProduct(
                                partials[static_cast<size_t>(j)])
                                .cwiseQuotient(p))
                               .sum();
      g(i, j) = entry;
      g(j, i) = entry;
    }
  }
  return g;
}

// Loewner order A >= B: min eigenvalue of (A - B) above -1e-9 relative to the
// larger operand's spectral norm.
inline bool loewner_geq(const MetricMatrix& a, const MetricMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatchError("loewner_geq: operand shapes differ");
  }
  const MatrixR diff = 0.5 * (a + a.transpose() - b - b.transpose());
  Eigen::SelfAdjointEigenSolver<MatrixR> diff_eig(diff, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<MatrixR> a_eig(MatrixR(0.5 * (a + a.transpose())),
                                               Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<MatrixR> b_eig(MatrixR(0.5 * (b + b.transpose())),
                                               Eigen::EigenvaluesOnly);
  const double norm_a = a_eig.eigenvalues().cwiseAbs().maxCoeff();
  const double norm_b = b_eig.eigenvalues().cwiseAbs().maxCoeff();
  const double tol = 1e-9 * std::max({1.0, norm_a, norm_b});
  return diff_eig.eigenvalues().minCoeff() >= -tol;
}

// All pairwise eigenvalue ratios p_i / p_j of a state; the grid on which the
// Petz order decides the Loewner order of the induced metrics.
inline std::vector<double> eigenvalue_ratios(const VectorR& eigenvalues) {
  std::vector<double> ratios;
  ratios.reserve(static_cast<size_t>(eigenvalues.size() * eigenvalues.size()));
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    for (Eigen::Index j = 0; j < eigenvalues.size(); ++j) {
      ratios.push_back(eigenvalues[i] / eigenvalues[j]);
    }
  }
  return ratios;
}

}  // namespace qnglab

#endif  // QNGLAB_METRICS_HPP
