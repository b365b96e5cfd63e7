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

#ifndef QNGLAB_DIVERGENCES_HPP
#define QNGLAB_DIVERGENCES_HPP

#include <cmath>
#include <functional>

#include "qnglab/errors.hpp"
#include "qnglab/linalg.hpp"
#include "qnglab/metrics.hpp"
#include "qnglab/states.hpp"
#include "qnglab/types.hpp"

namespace qnglab {

enum class DivergenceFamily { ClassicalRenyi, QuantumSandwichedRenyi, ClassicalKL, QuantumKL };

struct DivergenceSpec {
  DivergenceFamily family;
  double alpha = 0.0;  // Renyi families only; alpha not in {0, 1}

  static DivergenceSpec classical_renyi(double a) {
    check_renyi_alpha(a);
    return {DivergenceFamily::ClassicalRenyi, a};
  }
  static DivergenceSpec quantum_sandwiched_renyi(double a) {
    check_renyi_alpha(a);
    return {DivergenceFamily::QuantumSandwichedRenyi, a};
  }
  static DivergenceSpec classical_kl() { return {DivergenceFamily::ClassicalKL, 1.0}; }
  static DivergenceSpec quantum_kl() { return {DivergenceFamily::QuantumKL, 1.0}; }

  static void check_renyi_alpha(double a) {
    if (!std::isfinite(a) || a == 0.0 || a == 1.0) {
      throw InvalidParameterError("DivergenceSpec: Renyi alpha must be finite, not 0 or 1");
    }
  }
};

namespace detail {

inline void check_distribution(const VectorR& p, const char* where) {
  if (p.size() == 0 || p.minCoeff() <= 0.0 || std::abs(p.sum() - 1.0) > 1e-10) {
    throw InvalidDistributionError(std::string(where) +
                                   ": distribution must be strictly positive and sum to 1");
  }
}

inline void check_pair(const VectorR& p, const VectorR& q, const char* where) {
  check_distribution(p, where);
  check_distribution(q, where);
  if (p.size() != q.size()) {
    throw DimensionMismatchError(std::string(where) + ": distribution sizes differ");
  }
}

inline void check_state_pair(const DensityOperator& rho_bar, const DensityOperator& rho,
                             const char* where) {
  if (rho_bar.dim() != rho.dim()) {
    throw DimensionMismatchError(std::string(where) + ": state dimensions differ");
  }
  if (rho_bar.min_eigenvalue() < kMinStateEigenvalue ||
      rho.min_eigenvalue() < kMinStateEigenvalue) {
    throw SingularStateError(std::string(where) + ": states must be full rank");
  }
}

}  // namespace detail

// Rescaled Renyi divergence (the extra 1/alpha keeps the induced metric
// alpha-independent in the classical case):
//   D_alpha(p || q) = ln( sum_x p(x)^alpha q(x)^{1-alpha} ) / (alpha (alpha - 1))
inline double classical_renyi(const VectorR& p, const VectorR& q, double alpha) {
  DivergenceSpec::check_renyi_alpha(alpha);
  detail::check_pair(p, q, "classical_renyi");
  double acc = 0.0;
  for (Eigen::Index x = 0; x < p.size(); ++x) {
    acc += std::exp(alpha * std::log(p[x]) + (1.0 - alpha) * std::log(q[x]));
  }
  return std::log(acc) / (alpha * (alpha - 1.0));
}

inline double classical_kl(const VectorR& p, const VectorR& q) {
  detail::check_pair(p, q, "classical_kl");
  double acc = 0.0;
  for (Eigen::Index x = 0; x < p.size(); ++x) {
    acc += p[x] * std::log(p[x] / q[x]);
  }
  return acc;
}

// Rescaled sandwiched Renyi divergence:
//   D_alpha(rho_bar || rho)
//     = ln Tr[(rho^{(1-alpha)/2alpha} rho_bar rho^{(1-alpha)/2alpha})^alpha]
//       / (alpha (alpha - 1))
// The inner product is symmetrized and clipped at zero before the outer
// fractional power.
inline double quantum_sandwiched_renyi(const DensityOperator& rho_bar, const DensityOperator& rho,
                                       double alpha) {
  DivergenceSpec::check_renyi_alpha(alpha);
  detail::check_state_pair(rho_bar, rho, "quantum_sandwiched_renyi");
  const double s = (1.0 - alpha) / (2.0 * alpha);
  const MatrixC rho_s = spectral_apply(rho.spectral(), [s](double x) { return std::pow(x, s); });
  MatrixC inner = rho_s * rho_bar.matrix() * rho_s;
  inner = 0.5 * (inner + inner.adjoint().eval());
  const SpectralDecomposition<double> inner_spec = hermitian_eig(inner);
  double trace = 0.0;
  for (Eigen::Index i = 0; i < inner_spec.dim(); ++i) {
    const double q = std::max(inner_spec.eigenvalues[i], 0.0);
    trace += std::pow(q, alpha);
  }
  if (!std::isfinite(trace) || trace <= 0.0) {
    throw SingularStateError("quantum_sandwiched_renyi: sandwiched product is numerically singular");
  }
  return std::log(trace) / (alpha * (alpha - 1.0));
}

// Umegaki relative entropy Tr[rho_bar (ln rho_bar - ln rho)].
inline double quantum_kl(const DensityOperator& rho_bar, const DensityOperator& rho) {
  detail::check_state_pair(rho_bar, rho, "quantum_kl");
  const MatrixC log_bar = spectral_apply(rho_bar.spectral(), [](double x) { return std::log(x); });
  const MatrixC log_rho = spectral_apply(rho.spectral(), [](double x) { return std::log(x); });
  return frobenius_inner(rho_bar.matrix(), MatrixC(log_bar - log_rho)).real();
}

inline double evaluate_divergence(const DivergenceSpec& spec, const DensityOperator& rho_bar,
                                  const DensityOperator& rho) {
  switch (spec.family) {
    case DivergenceFamily::QuantumSandwichedRenyi:
      return quantum_sandwiched_renyi(rho_bar, rho, spec.alpha);
    case DivergenceFamily::QuantumKL:
      return quantum_kl(rho_bar, rho);
    default:
      throw InvalidParameterError("evaluate_divergence: classical family applied to states");
  }
}

inline double evaluate_divergence(const DivergenceSpec& spec, const VectorR& p, const VectorR& q) {
  switch (spec.family) {
    case DivergenceFamily::ClassicalRenyi:
      return classical_renyi(p, q, spec.alpha);
    case DivergenceFamily::ClassicalKL:
      return classical_kl(p, q);
    default:
      throw InvalidParameterError("evaluate_divergence: quantum family applied to distributions");
  }
}

// Central second differences of a displacement function D(theta + delta) with
// D(theta) = 0 at the base point:
//   H_ij = [D(+h_i + h_j) - D(+h_i - h_j) - D(-h_i + h_j) + D(-h_i - h_j)] / (4 h^2)
inline MetricMatrix fd_hessian(const std::function<double(const VectorR&)>& displaced,
                               const VectorR& theta, double h) {
  if (!(h > 0.0)) throw InvalidParameterError("fd_hessian: h must be positive");
  const Eigen::Index n = theta.size();
  MetricMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      VectorR ei = VectorR::Zero(n), ej = VectorR::Zero(n);
      ei[i] = h;
      ej[j] = h;
      const double entry = (displaced(theta + ei + ej) - displaced(theta + ei - ej) -
                            displaced(theta - ei + ej) + displaced(theta - ei - ej)) /
                           (4.0 * h * h);
      g(i, j) = entry;
      g(j, i) = entry;
    }
  }
  return g;
}

// Metric from a divergence by differentiating the first (barred) argument
// only, the second pinned at theta. Stencil states are delta-mixed with the
// same delta as the experiment so the bridge stays coherent with the
// closed-form metric of the mixed family.
inline MetricMatrix fd_metric_from_divergence(const DivergenceSpec& spec,
                                              const StateFamily& family, const VectorR& theta,
                                              double h = 1e-3, double delta = 0.0) {
  const MixedFamily mixed(family, delta);
  const DensityOperator pinned = mixed.value(theta);
  auto displaced = [&](const VectorR& theta_bar) {
    return evaluate_divergence(spec, mixed.value(theta_bar), pinned);
  };
  return fd_hessian(displaced, theta, h);
}

// Classical counterpart on a distribution family theta -> p_theta.
inline MetricMatrix fd_metric_from_divergence(
    const DivergenceSpec& spec, const std::function<VectorR(const VectorR&)>& dist_family,
    const VectorR& theta, double h = 1e-3) {
  const VectorR pinned = dist_family(theta);
  auto displaced = [&](const VectorR& theta_bar) {
    return evaluate_divergence(spec, dist_family(theta_bar), pinned);
  };
  return fd_hessian(displaced, theta, h);
}

}  // namespace qnglab

#endif  // QNGLAB_DIVERGENCES_HPP
