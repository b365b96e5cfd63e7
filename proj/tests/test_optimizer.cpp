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

#include <doctest.h>

#include <cmath>

#include "qnglab/optimizer.hpp"
#include "qnglab/random.hpp"
#include "test_helpers.hpp"

using namespace qnglab;
using namespace qnglab::testing;

namespace {

VectorR theta3(double a, double b, double c) {
  VectorR t(3);
  t << a, b, c;
  return t;
}

VectorR paper_theta0() { return theta3(M_PI / 2.0, M_PI / 2.0, M_PI / 4.0); }

OptimizerConfig paper_config(double alpha, StepMode mode) {
  OptimizerConfig cfg;
  cfg.mode = mode;
  cfg.epsilon = 1e-8;
  cfg.eta = 5e-4;
  cfg.petz = PetzFunction::alpha(alpha);
  cfg.xi = 1e-3;
  cfg.delta = 1e-3;
  return cfg;
}

}  // namespace

TEST_CASE("solve_spd: identity and diagonal systems") {
  VectorR b(2);
  b << 2.0, 4.0;
  CHECK((solve_spd(MetricMatrix::Identity(2, 2), b) - b).norm() <= 1e-14);
  MetricMatrix d(2, 2);
  d << 2, 0, 0, 4;
  const VectorR x = solve_spd(d, b);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.0));
}

TEST_CASE("solve_spd: random SPD systems satisfy the residual contract") {
  CounterRng rng(61);
  for (int i = 0; i < 30; ++i) {
    MatrixR a(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a(r, c) = rng.next_gaussian();
    const MetricMatrix g = a * a.transpose() + 0.05 * MatrixR::Identity(3, 3);
    const VectorR b = random_vector(rng, 3, -2.0, 2.0);
    const VectorR x = solve_spd(g, b);
    CHECK((g * x - b).norm() <= 1e-10 * b.norm());
  }
}

TEST_CASE("solve_spd: singular metric is rejected") {
  MetricMatrix g(2, 2);
  g << 1, 1, 1, 1;  // rank one
  VectorR b(2);
  b << 1.0, 0.0;
  CHECK_THROWS_AS(solve_spd(g, b), SingularMetricError);
  CHECK_THROWS_AS(solve_spd(MetricMatrix::Identity(2, 2), VectorR::Zero(3)),
                  DimensionMismatchError);
}

TEST_CASE("qng_step_trust_region: identity metric example") {
  VectorR grad(2);
  grad << 3.0, 4.0;
  const StepResult s = qng_step_trust_region(MetricMatrix::Identity(2, 2), grad, 0.5);
  CHECK(s.step[0] == doctest::Approx(-0.6).epsilon(1e-12));
  CHECK(s.step[1] == doctest::Approx(-0.8).epsilon(1e-12));
  CHECK(s.predicted_decrease == doctest::Approx(-5.0).epsilon(1e-12));
}

TEST_CASE("qng_step_trust_region: scalar metric example") {
  VectorR grad(2);
  grad << 1.0, 0.0;
  const StepResult s = qng_step_trust_region(4.0 * MetricMatrix::Identity(2, 2), grad, 2.0);
  CHECK(s.step[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.step[1] == doctest::Approx(0.0));
}

TEST_CASE("qng_step_trust_region: constraint saturation on random instances") {
  CounterRng rng(62);
  for (int i = 0; i < 30; ++i) {
    MatrixR a(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a(r, c) = rng.next_gaussian();
    const MetricMatrix g = a * a.transpose() + 0.1 * MatrixR::Identity(3, 3);
    const VectorR grad = random_vector(rng, 3, -1.0, 1.0);
    const double eps = std::pow(10.0, rng.next_uniform(-9.0, -2.0));
    const StepResult s = qng_step_trust_region(g, grad, eps);
    CHECK(0.5 * s.step.dot(g * s.step) == doctest::Approx(eps).epsilon(1e-9));
  }
}

TEST_CASE("qng_step_fixed: examples") {
  VectorR grad(3);
  grad << 1.0, 0.0, 0.0;
  const StepResult a = qng_step_fixed(MetricMatrix::Identity(3, 3), grad, 5e-4);
  CHECK(a.step[0] == doctest::Approx(-5e-4));
  CHECK(a.step[1] == 0.0);

  const StepResult zero = qng_step_fixed(MetricMatrix::Identity(3, 3), grad, 0.0);
  CHECK(zero.step.norm() == 0.0);

  MetricMatrix g(2, 2);
  g << 2, 0, 0, 1;
  VectorR grad2(2);
  grad2 << 2.0, 3.0;
  const StepResult b = qng_step_fixed(g, grad2, 1.0);
  CHECK(b.step[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(b.step[1] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(b.predicted_decrease == doctest::Approx(-11.0).epsilon(1e-12));
}

TEST_CASE("run_optimization: starting at the target converges immediately") {
  const RotationFamily family((Eigen::Vector3d(0.5, 0, 0)));
  const VectorR star = theta3(0.0, 0.0, 0.0);
  const DensityOperator target = family.value(star);
  const Trajectory traj = run_optimization(family, target, paper_config(0.5, StepMode::TrustRegion), star);
  CHECK(traj.reason == TerminationReason::VanishingGradient);
  CHECK(traj.records.size() == 1);
  CHECK(traj.records[0].cost <= 1e-12);
}

TEST_CASE("run_optimization: reference setup descends monotonically") {
  const RotationFamily family((Eigen::Vector3d(0.5, 0, 0)));
  const DensityOperator target = family.value(theta3(0, 0, 0));
  OptimizerConfig cfg = paper_config(0.5, StepMode::TrustRegion);
  cfg.max_iters = 100;
  const Trajectory traj = run_optimization(family, target, cfg, paper_theta0());
  REQUIRE(traj.records.size() == 101);
  for (size_t k = 1; k < traj.records.size(); ++k) {
    CHECK(traj.records[k].cost <= traj.records[k - 1].cost + 1e-15);
  }
  // recorded steps compose exactly: theta_{k+1} = theta_k + step_k
  for (size_t k = 1; k < traj.records.size(); ++k) {
    const VectorR expected = traj.records[k - 1].theta + traj.records[k - 1].step;
    CHECK((traj.records[k].theta - expected).norm() == 0.0);
  }
}

TEST_CASE("run_optimization: alpha = 0.3 beats alpha = 0.5 at the common final iteration") {
  const RotationFamily family((Eigen::Vector3d(0.5, 0, 0)));
  const DensityOperator target = family.value(theta3(0, 0, 0));
  OptimizerConfig a = paper_config(0.3, StepMode::TrustRegion);
  OptimizerConfig b = paper_config(0.5, StepMode::TrustRegion);
  a.max_iters = b.max_iters = 300;
  const Trajectory ta = run_optimization(family, target, a, paper_theta0());
  const Trajectory tb = run_optimization(family, target, b, paper_theta0());
  REQUIRE(ta.records.size() == tb.records.size());
  CHECK(ta.records.back().cost < tb.records.back().cost);
}

TEST_CASE("run_optimization: singular metric aborts with a partial trajectory") {
  // at theta = 0 the first and third generators coincide, so the unregularized
  // metric has rank 2
  const RotationFamily family((Eigen::Vector3d(0.5, 0, 0)));
  const DensityOperator target = family.value(theta3(0.4, 0.9, -0.2));
  OptimizerConfig cfg = paper_config(0.5, StepMode::TrustRegion);
  cfg.xi = 0.0;
  cfg.delta = 0.0;
  const Trajectory traj = run_optimization(family, target, cfg, theta3(0, 0, 0));
  CHECK(traj.reason == TerminationReason::SingularMetric);
  CHECK(traj.records.size() == 1);
  CHECK(!traj.error_message.empty());
}

TEST_CASE("run_optimization: diagonal mode differs from full mode yet still descends") {
  // generic start; the reference theta0 sits on a manifold where the metric
  // is already diagonal and the two modes coincide
  const RotationFamily family((Eigen::Vector3d(0.5, 0, 0)));
  const DensityOperator target = family.value(theta3(0, 0, 0));
  OptimizerConfig full = paper_config(0.1, StepMode::TrustRegion);
  OptimizerConfig diag = full;
  diag.diagonal = true;
  full.max_iters = diag.max_iters = 100;
  const VectorR theta0 = theta3(1.0, 0.7, -0.3);
  const Trajectory tf = run_optimization(family, target, full, theta0);
  const Trajectory td = run_optimization(family, target, diag, theta0);
  for (size_t k = 1; k < td.records.size(); ++k) {
    CHECK(td.records[k].cost <= td.records[k - 1].cost + 1e-15);
  }
  CHECK(tf.records.back().cost != td.records.back().cost);
}

TEST_CASE("run_optimization: descent prediction within ten percent at small epsilon") {
  const RotationFamily family((Eigen::Vector3d(0.5, 0, 0)));
  const DensityOperator target = family.value(theta3(0, 0, 0));
  OptimizerConfig cfg = paper_config(0.1, StepMode::TrustRegion);
  cfg.max_iters = 100;
  const Trajectory traj = run_optimization(family, target, cfg, paper_theta0());
  for (size_t k = 0; k + 1 < traj.records.size(); ++k) {
    const double realized = traj.records[k + 1].cost - traj.records[k].cost;
    const double predicted = traj.records[k].predicted_decrease;
    CHECK(std::abs(realized - predicted) <= 0.1 * std::abs(predicted));
  }
}

TEST_CASE("run_optimization: identical configs produce bit-identical trajectories") {
  const RotationFamily family((Eigen::Vector3d(0.5, 0, 0)));
  const DensityOperator target = family.value(theta3(0, 0, 0));
  OptimizerConfig cfg = paper_config(0.3, StepMode::FixedStep);
  cfg.max_iters = 50;
  const Trajectory a = run_optimization(family, target, cfg, paper_theta0());
  const Trajectory b = run_optimization(family, target, cfg, paper_theta0());
  REQUIRE(a.records.size() == b.records.size());
  for (size_t k = 0; k < a.records.size(); ++k) {
    CHECK(a.records[k].cost == b.records[k].cost);
    CHECK(a.records[k].theta.cwiseEqual(b.records[k].theta).all());
  }
}

TEST_CASE("run_optimization: final costs are ordered by beta = 1/alpha across the full sweep") {
  // the pointwise order of the Petz functions is monotone in beta, so under a
  // common divergence budget the per-step descent (and here the cost after
  // 1000 identical-start iterations) is too
  const RotationFamily family((Eigen::Vector3d(0.5, 0, 0)));
  const DensityOperator target = family.value(theta3(0, 0, 0));
  const std::vector<double> alphas_by_beta_desc = {0.1,    0.3,  0.5,  100.0,
                                                   -100.0, -1.0, -0.3, -0.1};
  std::vector<double> finals;
  for (double alpha : alphas_by_beta_desc) {
    OptimizerConfig cfg = paper_config(alpha, StepMode::TrustRegion);
    cfg.max_iters = 1000;
    finals.push_back(
        run_optimization(family, target, cfg, paper_theta0()).records.back().cost);
  }
  for (size_t k = 1; k < finals.size(); ++k) {
    CHECK(finals[k - 1] <= finals[k] + 1e-12);
  }
}

TEST_CASE("optimizer config validation") {
  OptimizerConfig cfg;
  cfg.mode = StepMode::TrustRegion;
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
  cfg.epsilon = 1e-8;
  cfg.xi = 1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
  cfg.xi = 1e-3;
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
}
