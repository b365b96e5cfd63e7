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

#ifndef QNGLAB_CLASSICAL_NG_HPP
#define QNGLAB_CLASSICAL_NG_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qnglab/errors.hpp"
#include "qnglab/metrics.hpp"
#include "qnglab/optimizer.hpp"
#include "qnglab/states.hpp"
#include "qnglab/types.hpp"

namespace qnglab {

// p_x = exp(theta_x) / sum_y exp(theta_y), computed with the max subtracted.
inline VectorR softmax_probabilities(const VectorR& theta) {
  if (theta.size() == 0 || !theta.allFinite()) {
    throw InvalidParameterError("softmax_probabilities: theta must be nonempty and finite");
  }
  const VectorR weights = (theta.array() - theta.maxCoeff()).exp().matrix();
  return weights / weights.sum();
}

// d_i p_x = p_x (delta_{xi} - p_i); each partial sums to zero.
inline std::vector<VectorR> softmax_partials(const VectorR& theta) {
  const VectorR p = softmax_probabilities(theta);
  std::vector<VectorR> partials;
  partials.reserve(static_cast<size_t>(theta.size()));
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    VectorR dp = -p[i] * p;
    dp[i] += p[i];
    partials.push_back(std::move(dp));
  }
  return partials;
}

inline std::pair<VectorR, std::vector<VectorR>> softmax_family(const VectorR& theta) {
  return {softmax_probabilities(theta), softmax_partials(theta)};
}

// One classical NG step on the softmax family. Shares the stepping code with
// the quantum optimizer through the MetricMatrix interface; by the classical
// limit the metric (and hence the step) does not depend on the Renyi alpha,
// which therefore does not appear below.
inline StepResult classical_ng_step(const VectorR& theta, const VectorR& loss_gradient,
                                    StepMode mode, double epsilon_or_eta, double xi,
                                    bool diagonal = false) {
  if (theta.size() != loss_gradient.size()) {
    throw DimensionMismatchError("classical_ng_step: gradient length mismatch");
  }
  const auto [p, partials] = softmax_family(theta);
  MetricMatrix g = classical_fisher_metric(p, partials);
  if (diagonal) g = diagonal_metric(g);
  g = regularize_metric(g, xi);
  return (mode == StepMode::TrustRegion) ? qng_step_trust_region(g, loss_gradient, epsilon_or_eta)
                                         : qng_step_fixed(g, loss_gradient, epsilon_or_eta);
}

// Softmax logits embedded as a diagonal density operator: the commuting
// family on which every quantum Fisher metric collapses to the classical one.
class DiagonalSoftmaxFamily final : public StateFamily {
 public:
  explicit DiagonalSoftmaxFamily(int size) : size_(size) {
    if (size < 2) throw InvalidParameterError("DiagonalSoftmaxFamily: size must be >= 2");
  }

  int parameter_count() const override { return size_; }
  int dim() const override { return size_; }

  DensityOperator value(const VectorR& theta) const override {
    check_theta(theta);
    const VectorR p = softmax_probabilities(theta);
    return DensityOperator(p.cast<std::complex<double>>().asDiagonal());
  }

  TangentMRep partials(const VectorR& theta) const override {
    check_theta(theta);
    TangentMRep out;
    out.reserve(static_cast<size_t>(size_));
    for (const auto& dp : softmax_partials(theta)) {
      out.emplace_back(dp.cast<std::complex<double>>().asDiagonal());
    }
    return out;
  }

  std::string descriptor() const override {
    return "softmax(size=" + std::to_string(size_) + ")";
  }

 private:
  void check_theta(const VectorR& theta) const {
    if (theta.size() != size_) {
      throw DimensionMismatchError("DiagonalSoftmaxFamily: theta has wrong length");
    }
  }

  int size_;
};

// Classical NG run on the softmax family against a target distribution, with
// the squared-distance cost L = sum_x (p_theta(x) - p*(x))^2 mirroring the
// Frobenius cost of the quantum runs.
inline Trajectory run_classical_optimization(const VectorR& target_probs,
                                             const OptimizerConfig& cfg, const VectorR& theta0) {
  cfg.validate();
  if (target_probs.size() != theta0.size()) {
    throw DimensionMismatchError("run_classical_optimization: target/theta0 length mismatch");
  }
  Trajectory traj;
  traj.alpha_label = cfg.petz.alpha_value();
  VectorR theta = theta0;
  const VectorR zero_step = VectorR::Zero(theta.size());

  for (int tau = 0;; ++tau) {
    const auto [p, partials] = softmax_family(theta);
    const VectorR diff = p - target_probs;
    const double cost = diff.squaredNorm();
    VectorR grad(theta.size());
    for (Eigen::Index i = 0; i < theta.size(); ++i) {
      grad[i] = 2.0 * partials[static_cast<size_t>(i)].dot(diff);
    }
    const double grad_norm = grad.norm();

    if (grad_norm <= cfg.grad_tol) {
      traj.records.push_back({tau, theta, cost, grad_norm, zero_step, 0.0});
      traj.reason = TerminationReason::VanishingGradient;
      break;
    }
    if (tau >= cfg.max_iters) {
      traj.records.push_back({tau, theta, cost, grad_norm, zero_step, 0.0});
      traj.reason = TerminationReason::MaxIterations;
      break;
    }

    StepResult step;
    try {
      const double scale = (cfg.mode == StepMode::TrustRegion) ? cfg.epsilon : cfg.eta;
      step = classical_ng_step(theta, grad, cfg.mode, scale, cfg.xi, cfg.diagonal);
    } catch (const VanishingGradientError&) {
      traj.records.push_back({tau, theta, cost, grad_norm, zero_step, 0.0});
      traj.reason = TerminationReason::VanishingGradient;
      break;
    } catch (const SingularMetricError& err) {
      traj.records.push_back({tau, theta, cost, grad_norm, zero_step, 0.0});
      traj.reason = TerminationReason::SingularMetric;
      traj.error_message = err.what();
      break;
    }

    traj.records.push_back({tau, theta, cost, grad_norm, step.step, step.predicted_decrease});
    theta += step.step;
  }
  return traj;
}

}  // namespace qnglab

#endif  // QNGLAB_CLASSICAL_NG_HPP
