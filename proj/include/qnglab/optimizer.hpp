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

#ifndef QNGLAB_OPTIMIZER_HPP
#define QNGLAB_OPTIMIZER_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qnglab/errors.hpp"
#include "qnglab/metrics.hpp"
#include "qnglab/petz.hpp"
#include "qnglab/states.hpp"
#include "qnglab/types.hpp"

namespace qnglab {

// x = G^{-1} b via Cholesky; never forms the explicit inverse. The residual
// is validated against the contract ||Gx - b|| <= 1e-10 ||b||.
inline VectorR solve_spd(const MetricMatrix& g, const VectorR& b) {
  if (g.rows() != g.cols() || g.rows() != b.size()) {
    throw DimensionMismatchError("solve_spd: dimension mismatch");
  }
  const Eigen::LLT<MatrixR> llt(g);
  if (llt.info() != Eigen::Success) {
    throw SingularMetricError("solve_spd: Cholesky factorization failed (metric not PD)");
  }
  const VectorR x = llt.solve(b);
  if ((g * x - b).norm() > 1e-10 * std::max(b.norm(), 1e-300)) {
    throw SingularMetricError("solve_spd: residual exceeds tolerance (metric near-singular)");
  }
  return x;
}

struct StepResult {
  VectorR step;
  double predicted_decrease = 0.0;
};

// Trust-region rule: step = -sqrt(2 eps / (grad^T G^{-1} grad)) G^{-1} grad.
// Saturates (1/2) step^T G step = eps exactly; the first-order change of the
// cost along the step is -sqrt(2 eps grad^T G^{-1} grad).
inline StepResult qng_step_trust_region(const MetricMatrix& g, const VectorR& grad,
                                        double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidParameterError("qng_step_trust_region: epsilon must be > 0");
  const VectorR nat = solve_spd(g, grad);
  const double quad = grad.dot(nat);
  if (!(quad > 0.0)) {
    throw VanishingGradientError("qng_step_trust_region: gradient term vanished");
  }
  StepResult out;
  out.step = -std::sqrt(2.0 * epsilon / quad) * nat;
  out.predicted_decrease = -std::sqrt(2.0 * epsilon * quad);
  return out;
}

// Fixed-step rule: step = -eta G^{-1} grad; first-order change
// -eta grad^T G^{-1} grad.
inline StepResult qng_step_fixed(const MetricMatrix& g, const VectorR& grad, double eta) {
  if (!(eta >= 0.0)) throw InvalidParameterError("qng_step_fixed: eta must be >= 0");
  const VectorR nat = solve_spd(g, grad);
  StepResult out;
  out.step = -eta * nat;
  out.predicted_decrease = -eta * grad.dot(nat);
  return out;
}

enum class StepMode { TrustRegion, FixedStep };

struct OptimizerConfig {
  StepMode mode = StepMode::TrustRegion;
  double epsilon = 1e-8;
  double eta = 5e-4;
  PetzFunction petz = PetzFunction::sld();
  double xi = 1e-3;
  double delta = 1e-3;
  bool diagonal = false;   // use the diagonal metric approximation
  bool mix_cost = true;    // evaluate cost/gradient on the delta-mixed family
  int max_iters = 10000;
  double grad_tol = 1e-12;

  void validate() const {
    if (mode == StepMode::TrustRegion && !(epsilon > 0.0)) {
      throw InvalidParameterError("OptimizerConfig: epsilon must be > 0 in trust-region mode");
    }
    if (mode == StepMode::FixedStep && !(eta > 0.0)) {
      throw InvalidParameterError("OptimizerConfig: eta must be > 0 in fixed-step mode");
    }
    if (!(xi >= 0.0) || xi >= 1.0) throw InvalidParameterError("OptimizerConfig: xi in [0, 1)");
    if (!(delta >= 0.0) || delta >= 1.0) {
      throw InvalidParameterError("OptimizerConfig: delta in [0, 1)");
    }
    if (max_iters < 1) throw InvalidParameterError("OptimizerConfig: max_iters >= 1");
    if (!(grad_tol > 0.0)) throw InvalidParameterError("OptimizerConfig: grad_tol must be > 0");
  }
};

struct IterationRecord {
  int iter = 0;
  VectorR theta;
  double cost = 0.0;
  double grad_norm = 0.0;
  VectorR step;
  double predicted_decrease = 0.0;
};

enum class TerminationReason { MaxIterations, VanishingGradient, SingularMetric };

struct Trajectory {
  std::vector<IterationRecord> records;
  TerminationReason reason = TerminationReason::MaxIterations;
  std::string error_message;
  double alpha_label = std::numeric_limits<double>::quiet_NaN();

  const IterationRecord& back() const { return records.back(); }
};

// One QNG run. Per iteration: delta-mix the state, spectral-decompose, build
// the f-metric (diagonal if requested), xi-regularize, step, update theta.
// Terminates at max_iters or when ||grad|| <= grad_tol; a singular metric
// aborts with the partial trajectory annotated.
inline Trajectory run_optimization(const StateFamily& family, const DensityOperator& target,
                                   const OptimizerConfig& cfg, const VectorR& theta0) {
  cfg.validate();
  if (theta0.size() != family.parameter_count()) {
    throw DimensionMismatchError("run_optimization: theta0 has wrong length");
  }
  const MixedFamily mixed(family, cfg.delta);
  const StateFamily& cost_family = cfg.mix_cost ? static_cast<const StateFamily&>(mixed) : family;
  const DensityOperator cost_target =
      cfg.mix_cost ? mix_with_identity(target, cfg.delta) : target;

  Trajectory traj;
  traj.alpha_label = cfg.petz.alpha_value();
  traj.records.reserve(static_cast<size_t>(cfg.max_iters) + 1);
  VectorR theta = theta0;
  const VectorR zero_step = VectorR::Zero(theta.size());

  for (int tau = 0;; ++tau) {
    const DensityOperator rho_cost = cost_family.value(theta);
    const double cost = cost_value(rho_cost, cost_target);
    const VectorR grad = cost_gradient(cost_family.partials(theta), rho_cost, cost_target);
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

    const DensityOperator rho_metric = mixed.value(theta);
    MetricMatrix g = quantum_fisher_metric(rho_metric.spectral(), mixed.partials(theta), cfg.petz);
    if (cfg.diagonal) g = diagonal_metric(g);
    g = regularize_metric(g, cfg.xi);

    StepResult step;
    try {
      step = (cfg.mode == StepMode::TrustRegion) ? qng_step_trust_region(g, grad, cfg.epsilon)
                                                 : qng_step_fixed(g, grad, cfg.eta);
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

#endif  // QNGLAB_OPTIMIZER_HPP
