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

#include "qnglab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "qnglab/classical_ng.hpp"
#include "qnglab/divergences.hpp"
#include "qnglab/linalg.hpp"
#include "qnglab/metrics.hpp"
#include "qnglab/optimizer.hpp"
#include "qnglab/petz.hpp"
#include "qnglab/random.hpp"
#include "qnglab/states.hpp"

namespace qnglab {

namespace {

// Accumulates the worst violation of `value <= tolerance` style checks.
class Check {
 public:
  Check(std::string name, double tolerance) : result_{} {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void observe(double violation, const std::string& context = "") {
    if (violation > result_.max_violation) {
      result_.max_violation = violation;
      worst_context_ = context;
    }
  }

  void require(bool ok, const std::string& context) {
    if (!ok) {
      hard_failure_ = true;
      if (worst_context_.empty()) worst_context_ = context;
    }
  }

  PropertyResult finish() {
    result_.passed = !hard_failure_ && result_.max_violation <= result_.tolerance;
    result_.detail = worst_context_;
    return result_;
  }

 private:
  PropertyResult result_;
  std::string worst_context_;
  bool hard_failure_ = false;
};

std::vector<PetzFunction> all_kinds() {
  std::vector<PetzFunction> kinds = {PetzFunction::sld(), PetzFunction::rrld(),
                                     PetzFunction::kubo_mori()};
  for (double a : {0.1, 0.3, 0.5, 0.7, 2.0, 100.0, -100.0, -1.0, -0.3, -0.1, 1.0, -2.0}) {
    kinds.push_back(PetzFunction::alpha(a));
  }
  return kinds;
}

// ---------------------------------------------------------------------------
// petz

PropertyResult petz_identity_at_one() {
  Check check("petz.identity_at_one", 0.0);
  for (const auto& f : all_kinds()) {
    check.observe(std::abs(petz_eval(f, 1.0) - 1.0), f.name());
  }
  return check.finish();
}

PropertyResult petz_symmetry() {
  Check check("petz.symmetry", 0.0);
  const auto grid = log_spaced_grid(1e-6, 1e6, 200);
  for (const auto& f : all_kinds()) {
    for (double t : grid) {
      const double ft = petz_eval(f, t);
      const double defect = std::abs(ft - t * petz_eval(f, 1.0 / t));
      const double excess = defect - 1e-10 * std::max(1.0, ft);
      check.observe(excess, f.name() + " at t=" + std::to_string(t));
    }
  }
  return check.finish();
}

PropertyResult petz_thm2_beta_monotonicity(CounterRng& rng, int trials) {
  Check check("petz.thm2_beta_monotonicity", 1e-12);
  std::vector<double> ts = {0.1, 0.5, 2.0, 10.0};
  for (int i = 0; i < trials; ++i) ts.push_back(rng.next_uniform(1e-3, 1e3));
  const std::vector<double> alpha_chain = {0.1, 0.2, 0.3, 0.4, 0.5};
  // beta = 1/alpha chain spanning both signs; beta = 0 is the Kubo-Mori limit
  const std::vector<double> beta_chain = {-10.0, -2.0, -1.0, -0.5, -0.1, 0.0,
                                          0.1,   0.5,  1.0,  2.0,  5.0,  10.0};
  for (double t : ts) {
    if (t == 1.0) continue;
    for (size_t k = 1; k < alpha_chain.size(); ++k) {
      const double lo = petz_eval(PetzFunction::alpha(alpha_chain[k]), t);
      const double hi = petz_eval(PetzFunction::alpha(alpha_chain[k - 1]), t);
      check.observe(lo - hi, "alpha chain at t=" + std::to_string(t));
    }
    double prev = -std::numeric_limits<double>::infinity();
    for (double beta : beta_chain) {
      const double v = (beta == 0.0) ? petz_eval(PetzFunction::kubo_mori(), t)
                                     : petz_eval(PetzFunction::alpha(1.0 / beta), t);
      check.observe(prev - v, "beta chain at t=" + std::to_string(t));
      prev = v;
    }
  }
  return check.finish();
}

PropertyResult petz_thm1_extremality() {
  Check check("petz.thm1_extremality", 0.0);
  const auto grid = default_order_grid();
  for (double a : {-100.0, -2.0, -1.0, 0.5, 0.7, 2.0, 100.0}) {
    const PetzFunction f = PetzFunction::alpha(a);
    const bool lower = petz_pointwise_leq(PetzFunction::rrld(), f, grid);
    const bool upper = petz_pointwise_leq(f, PetzFunction::sld(), grid);
    check.require(lower && upper, "alpha=" + std::to_string(a));
  }
  return check.finish();
}

PropertyResult petz_singularity_continuity() {
  Check check("petz.singularity_continuity", 1e-6);
  for (double a : {0.1, 0.3, 0.5, 2.0, -1.0, -0.3, 100.0}) {
    const PetzFunction f = PetzFunction::alpha(a);
    check.observe(std::abs(petz_eval(f, 1.0 + 1e-8) - 1.0), "t=1+1e-8, alpha=" + std::to_string(a));
    check.observe(std::abs(petz_eval(f, 1.0 - 1e-8) - 1.0), "t=1-1e-8, alpha=" + std::to_string(a));
  }
  for (double a : {1.0 + 1e-9, 1.0 - 1e-9}) {
    const PetzFunction f = PetzFunction::alpha(a);
    for (double t : log_spaced_grid(1e-2, 1e2, 41)) {
      const double limit = (t == 1.0) ? 1.0 : (t - 1.0) / std::log(t);
      check.observe(std::abs(petz_eval(f, t) - limit), "alpha near 1 at t=" + std::to_string(t));
    }
  }
  return check.finish();
}

PropertyResult petz_fig1_ordering() {
  Check check("petz.fig1_ordering", 0.0);
  const std::vector<double> alphas = {0.1, 0.3, 0.5, 100.0, -100.0, -1.0, -0.3, -0.1};
  for (double t = 1.05; t <= 5.0; t += 0.05) {
    double top = -std::numeric_limits<double>::infinity();
    double bottom = std::numeric_limits<double>::infinity();
    double f01 = 0, fm01 = 0;
    for (double a : alphas) {
      const double v = petz_eval(PetzFunction::alpha(a), t);
      top = std::max(top, v);
      bottom = std::min(bottom, v);
      if (a == 0.1) f01 = v;
      if (a == -0.1) fm01 = v;
    }
    check.require(f01 >= top && fm01 <= bottom, "t=" + std::to_string(t));
  }
  return check.finish();
}

// ---------------------------------------------------------------------------
// metrics

struct MetricInstance {
  DensityOperator rho;
  TangentMRep tangents;
};

MetricInstance random_instance(CounterRng& rng, bool qutrit) {
  DensityOperator rho = qutrit ? random_qutrit_state(rng) : random_qubit_state(rng);
  TangentMRep tangents = random_tangent_set(rng, static_cast<int>(rho.dim()), 3);
  return {std::move(rho), std::move(tangents)};
}

// Decides the pointwise order of (f, g) on the realized eigenvalue-ratio set
// and returns (f_leq_g, g_leq_f).
std::pair<bool, bool> ratio_order(const PetzFunction& f, const PetzFunction& g,
                                  const VectorR& eigenvalues) {
  const auto ratios = eigenvalue_ratios(eigenvalues);
  return {petz_pointwise_leq(f, g, ratios), petz_pointwise_leq(g, f, ratios)};
}

const std::vector<std::pair<PetzFunction, PetzFunction>>& metric_test_pairs() {
  static const std::vector<std::pair<PetzFunction, PetzFunction>> pairs = {
      {PetzFunction::rrld(), PetzFunction::sld()},
      {PetzFunction::alpha(0.1), PetzFunction::sld()},
      {PetzFunction::alpha(0.3), PetzFunction::alpha(0.5)}};
  return pairs;
}

PropertyResult metrics_thm4_loewner(CounterRng& rng, int trials, bool diagonal) {
  Check check(diagonal ? "metrics.thm5_loewner_diagonal" : "metrics.thm4_loewner_full", 0.0);
  for (int i = 0; i < trials; ++i) {
    const MetricInstance inst = random_instance(rng, i % 2 == 1);
    for (const auto& [f, g] : metric_test_pairs()) {
      MetricMatrix gf = quantum_fisher_metric(inst.rho.spectral(), inst.tangents, f);
      MetricMatrix gg = quantum_fisher_metric(inst.rho.spectral(), inst.tangents, g);
      if (diagonal) {
        gf = diagonal_metric(gf);
        gg = diagonal_metric(gg);
      }
      const auto [f_leq_g, g_leq_f] = ratio_order(f, g, inst.rho.eigenvalues());
      if (f_leq_g) {
        check.require(loewner_geq(gf, gg), f.name() + " <= " + g.name() + " but G order fails");
      }
      if (g_leq_f) {
        check.require(loewner_geq(gg, gf), g.name() + " <= " + f.name() + " but G order fails");
      }
      check.require(f_leq_g || g_leq_f, "incomparable pair " + f.name() + ", " + g.name());
    }
  }
  return check.finish();
}

PropertyResult metrics_inverse_order(CounterRng& rng, int trials) {
  Check check("metrics.inverse_order", 0.0);
  for (int i = 0; i < trials; ++i) {
    const MetricInstance inst = random_instance(rng, i % 2 == 1);
    for (const auto& [f, g] : metric_test_pairs()) {
      // xi floor keeps both operands strictly PD so the inverses exist
      const MetricMatrix gf =
          regularize_metric(quantum_fisher_metric(inst.rho.spectral(), inst.tangents, f), 1e-6);
      const MetricMatrix gg =
          regularize_metric(quantum_fisher_metric(inst.rho.spectral(), inst.tangents, g), 1e-6);
      const MetricMatrix gf_inv = gf.inverse();
      const MetricMatrix gg_inv = gg.inverse();
      if (loewner_geq(gf, gg)) {
        check.require(loewner_geq(gg_inv, gf_inv), "forward order without inverse order");
      }
      if (loewner_geq(gg_inv, gf_inv)) {
        check.require(loewner_geq(gf, gg), "inverse order without forward order");
      }
    }
  }
  return check.finish();
}

PropertyResult metrics_symmetry(CounterRng& rng, int trials) {
  Check check("metrics.symmetry", 1e-10);
  for (int i = 0; i < trials; ++i) {
    const MetricInstance inst = random_instance(rng, i % 2 == 1);
    for (const auto& f : {PetzFunction::sld(), PetzFunction::alpha(0.1), PetzFunction::alpha(-0.3)}) {
      const MetricMatrix g = quantum_fisher_metric(inst.rho.spectral(), inst.tangents, f);
      check.observe((g - g.transpose()).cwiseAbs().maxCoeff(), f.name());
    }
  }
  return check.finish();
}

PropertyResult metrics_classical_reduction(CounterRng& rng, int trials) {
  Check check("metrics.classical_reduction", 1e-10);
  const DiagonalSoftmaxFamily family(3);
  for (int i = 0; i < trials; ++i) {
    const VectorR theta = random_vector(rng, 3, -1.5, 1.5);
    const DensityOperator rho = family.value(theta);
    const TangentMRep tangents = family.partials(theta);
    const auto [p, dp] = softmax_family(theta);
    const MetricMatrix classical = classical_fisher_metric(p, dp);
    for (double a : {-1.0, 0.1, 0.5, 2.0}) {
      const MetricMatrix quantum =
          quantum_fisher_metric(rho.spectral(), tangents, PetzFunction::alpha(a));
      check.observe((quantum - classical).cwiseAbs().maxCoeff(),
                    "alpha=" + std::to_string(a) + " vs classical");
    }
  }
  return check.finish();
}

PropertyResult metrics_route_equivalence(CounterRng& rng, int trials) {
  Check check("metrics.route_equivalence", 1e-10);
  for (int i = 0; i < trials; ++i) {
    const MetricInstance inst = random_instance(rng, i % 2 == 1);
    for (const auto& f : {PetzFunction::sld(), PetzFunction::rrld(), PetzFunction::alpha(0.3)}) {
      const MetricMatrix a = quantum_fisher_metric(inst.rho.spectral(), inst.tangents, f);
      const MetricMatrix b = quantum_fisher_metric_via_erep(inst.rho.spectral(), inst.tangents, f);
      check.observe((a - b).cwiseAbs().maxCoeff() / std::max(1.0, a.cwiseAbs().maxCoeff()),
                    f.name());
    }
  }
  return check.finish();
}

// ---------------------------------------------------------------------------
// divergences

PropertyResult div_nonnegativity(CounterRng& rng, int trials) {
  Check check("div.nonnegativity_identity", 1e-12);
  for (int i = 0; i < trials; ++i) {
    const bool qutrit = i % 2 == 1;
    const DensityOperator a = qutrit ? random_qutrit_state(rng) : random_qubit_state(rng);
    const DensityOperator b = qutrit ? random_qutrit_state(rng) : random_qubit_state(rng);
    VectorR p(3), q(3);
    for (int k = 0; k < 3; ++k) p[k] = rng.next_uniform(0.1, 1.0);
    for (int k = 0; k < 3; ++k) q[k] = rng.next_uniform(0.1, 1.0);
    p /= p.sum();
    q /= q.sum();
    for (double alpha : {-1.0, 0.3, 0.5, 2.0}) {
      check.observe(-quantum_sandwiched_renyi(a, b, alpha), "qsr alpha=" + std::to_string(alpha));
      check.observe(-classical_renyi(p, q, alpha), "cr alpha=" + std::to_string(alpha));
      check.observe(std::abs(quantum_sandwiched_renyi(a, a, alpha)), "qsr identity");
      check.observe(std::abs(classical_renyi(p, p, alpha)), "cr identity");
    }
    check.observe(-quantum_kl(a, b), "qkl");
    check.observe(-classical_kl(p, q), "ckl");
    check.observe(std::abs(quantum_kl(a, a)), "qkl identity");
    check.observe(std::abs(classical_kl(p, p)), "ckl identity");
  }
  return check.finish();
}

PropertyResult div_commuting_consistency(CounterRng& rng, int trials) {
  Check check("div.commuting_consistency", 1e-10);
  for (int i = 0; i < trials; ++i) {
    VectorR p(3), q(3);
    for (int k = 0; k < 3; ++k) p[k] = rng.next_uniform(0.1, 1.0);
    for (int k = 0; k < 3; ++k) q[k] = rng.next_uniform(0.1, 1.0);
    p /= p.sum();
    q /= q.sum();
    const DensityOperator rp(p.cast<std::complex<double>>().asDiagonal());
    const DensityOperator rq(q.cast<std::complex<double>>().asDiagonal());
    for (double alpha : {-1.0, 0.3, 0.5, 2.0}) {
      check.observe(
          std::abs(quantum_sandwiched_renyi(rp, rq, alpha) - classical_renyi(p, q, alpha)),
          "alpha=" + std::to_string(alpha));
    }
    check.observe(std::abs(quantum_kl(rp, rq) - classical_kl(p, q)), "kl");
  }
  return check.finish();
}

PropertyResult div_eq16_bridge(CounterRng& rng, int trials) {
  Check check("div.eq16_bridge", 1e-3);
  const RotationFamily family(Eigen::Vector3d(0.5, 0.0, 0.0));
  for (int i = 0; i < trials; ++i) {
    const VectorR theta = random_vector(rng, 3, -2.0, 2.0);
    const DensityOperator rho = family.value(theta);
    const TangentMRep parts = family.partials(theta);
    for (double alpha : {-1.0, -0.3, 0.1, 0.3, 0.5, 2.0}) {
      const MetricMatrix closed =
          quantum_fisher_metric(rho.spectral(), parts, PetzFunction::alpha(alpha));
      const MetricMatrix fd = fd_metric_from_divergence(
          DivergenceSpec::quantum_sandwiched_renyi(alpha), family, theta, 1e-3);
      check.observe((closed - fd).norm() / closed.norm(), "alpha=" + std::to_string(alpha));
    }
  }
  return check.finish();
}

PropertyResult div_classical_alpha_independence(CounterRng& rng, int trials) {
  Check check("div.classical_alpha_independence", 1e-4);
  auto dist = [](const VectorR& th) { return softmax_probabilities(th); };
  for (int i = 0; i < trials; ++i) {
    const VectorR theta = random_vector(rng, 3, -1.0, 1.0);
    MetricMatrix ref;
    bool first = true;
    for (double alpha : {-0.5, 0.3, 0.5, 2.0}) {
      const MetricMatrix g =
          fd_metric_from_divergence(DivergenceSpec::classical_renyi(alpha), dist, theta, 1e-3);
      if (first) {
        ref = g;
        first = false;
      } else {
        check.observe((g - ref).cwiseAbs().maxCoeff(), "alpha=" + std::to_string(alpha));
      }
    }
  }
  return check.finish();
}

// ---------------------------------------------------------------------------
// states

PropertyResult states_spectrum_invariance(CounterRng& rng, int trials) {
  Check check("states.spectrum_invariance", 1e-10);
  const Eigen::Vector3d bloch(0.5, 0.0, 0.0);
  const RotationFamily family(bloch);
  const double r = bloch.norm();
  const int count = std::max(trials, 100);
  for (int i = 0; i < count; ++i) {
    const VectorR theta = random_vector(rng, 3, -6.0, 6.0);
    const VectorR p = family.value(theta).eigenvalues();
    check.observe(std::abs(p[0] - 0.5 * (1.0 - r)), "low eigenvalue");
    check.observe(std::abs(p[1] - 0.5 * (1.0 + r)), "high eigenvalue");
  }
  return check.finish();
}

PropertyResult states_partials_traceless(CounterRng& rng, int trials) {
  Check check("states.partials_traceless", 1e-12);
  const RotationFamily family(Eigen::Vector3d(0.3, -0.4, 0.2));
  for (int i = 0; i < trials; ++i) {
    const VectorR theta = random_vector(rng, 3, -4.0, 4.0);
    for (const auto& dp : family.partials(theta)) {
      check.observe(std::abs(dp.trace()), "trace");
      check.observe((dp - dp.adjoint().eval()).norm(), "hermiticity");
    }
  }
  return check.finish();
}

PropertyResult states_partials_fd(CounterRng& rng, int trials) {
  Check check("states.partials_fd", 1e-7);
  const RotationFamily family(Eigen::Vector3d(0.5, 0.0, 0.0));
  const double h = 1e-6;
  for (int i = 0; i < trials; ++i) {
    const VectorR theta = random_vector(rng, 3, -3.0, 3.0);
    const TangentMRep analytic = family.partials(theta);
    for (int k = 0; k < 3; ++k) {
      VectorR up = theta, dn = theta;
      up[k] += h;
      dn[k] -= h;
      const MatrixC fd = (family.value(up).matrix() - family.value(dn).matrix()) / (2.0 * h);
      check.observe((analytic[static_cast<size_t>(k)] - fd).cwiseAbs().maxCoeff(),
                    "k=" + std::to_string(k));
    }
  }
  return check.finish();
}

PropertyResult states_gradient_fd(CounterRng& rng, int trials) {
  Check check("states.gradient_fd", 1e-7);
  const RotationFamily family(Eigen::Vector3d(0.5, 0.0, 0.0));
  const DensityOperator target = family.value(VectorR::Zero(3));
  const double h = 1e-6;
  for (int i = 0; i < trials; ++i) {
    const VectorR theta = random_vector(rng, 3, -3.0, 3.0);
    const VectorR grad = cost_gradient(family, target, theta);
    const double scale = std::max(1.0, grad.norm());
    for (int k = 0; k < 3; ++k) {
      VectorR up = theta, dn = theta;
      up[k] += h;
      dn[k] -= h;
      const double fd = (cost_value(family, target, up) - cost_value(family, target, dn)) / (2.0 * h);
      check.observe(std::abs(grad[k] - fd) / scale, "k=" + std::to_string(k));
    }
  }
  return check.finish();
}

PropertyResult states_cost_nonneg(CounterRng& rng, int trials) {
  Check check("states.cost_nonneg", 0.0);
  const RotationFamily family(Eigen::Vector3d(0.5, 0.0, 0.0));
  const VectorR star = random_vector(rng, 3, -2.0, 2.0);
  const DensityOperator target = family.value(star);
  check.observe(std::abs(cost_value(family, target, star)), "cost at theta*");
  for (int i = 0; i < trials; ++i) {
    const VectorR theta = random_vector(rng, 3, -4.0, 4.0);
    check.observe(-cost_value(family, target, theta), "negative cost");
  }
  return check.finish();
}

PropertyResult states_mixing_affine(CounterRng& rng, int trials) {
  Check check("states.mixing_affine", 1e-14);
  for (int i = 0; i < trials; ++i) {
    const DensityOperator rho = (i % 2 == 0) ? random_qubit_state(rng) : random_qutrit_state(rng);
    const double delta = rng.next_uniform(0.0, 0.5);
    const DensityOperator mixed = mix_with_identity(rho, delta);
    check.observe(std::abs(mixed.matrix().trace().real() - 1.0), "trace");
    check.observe(std::abs(mixed.matrix().trace().imag()), "imag trace");
    check.observe((mixed.matrix() - mixed.matrix().adjoint().eval()).norm(), "hermiticity");
    const double floor = delta / static_cast<double>(rho.dim());
    check.observe(floor - mixed.min_eigenvalue(), "spectral floor");
  }
  return check.finish();
}

// ---------------------------------------------------------------------------
// optimizer

PropertyResult opt_constraint_saturation(CounterRng& rng, int trials) {
  Check check("opt.constraint_saturation", 1e-9);
  for (int i = 0; i < trials; ++i) {
    const int n = 3;
    MatrixR a(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = rng.next_gaussian();
    const MetricMatrix g = a * a.transpose() + 0.1 * MatrixR::Identity(n, n);
    VectorR grad = random_vector(rng, n, -1.0, 1.0);
    const double eps = std::pow(10.0, rng.next_uniform(-9.0, -3.0));
    const StepResult s = qng_step_trust_region(g, grad, eps);
    const double quad = 0.5 * s.step.dot(g * s.step);
    check.observe(std::abs(quad - eps) / eps, "eps=" + std::to_string(eps));
  }
  return check.finish();
}

PropertyResult opt_solve_residual(CounterRng& rng, int trials) {
  Check check("opt.solve_residual", 1e-10);
  for (int i = 0; i < trials; ++i) {
    const int n = 3;
    MatrixR a(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = rng.next_gaussian();
    const MetricMatrix g = a * a.transpose() + 0.05 * MatrixR::Identity(n, n);
    const VectorR b = random_vector(rng, n, -2.0, 2.0);
    const VectorR x = solve_spd(g, b);
    check.observe((g * x - b).norm() / std::max(b.norm(), 1e-12), "residual");
  }
  return check.finish();
}

OptimizerConfig paper_config(double alpha, StepMode mode, bool diagonal) {
  OptimizerConfig cfg;
  cfg.mode = mode;
  cfg.epsilon = 1e-8;
  cfg.eta = 5e-4;
  cfg.petz = PetzFunction::alpha(alpha);
  cfg.xi = 1e-3;
  cfg.delta = 1e-3;
  cfg.diagonal = diagonal;
  cfg.max_iters = 100;
  return cfg;
}

VectorR paper_theta0() {
  VectorR t(3);
  t << M_PI / 2.0, M_PI / 2.0, M_PI / 4.0;
  return t;
}

PropertyResult opt_descent_prediction(bool diagonal) {
  Check check(diagonal ? "opt.diagonal_descent_prediction" : "opt.descent_prediction", 0.1);
  const RotationFamily family(Eigen::Vector3d(0.5, 0.0, 0.0));
  const DensityOperator target = family.value(VectorR::Zero(3));
  // the reference start sits on a symmetry manifold where the metric is
  // exactly diagonal; the generic start exercises off-diagonal coupling
  VectorR generic(3);
  generic << 1.0, 0.7, -0.3;
  for (const VectorR& theta0 : {paper_theta0(), generic}) {
    for (double alpha : {0.1, 0.5}) {
      const Trajectory traj = run_optimization(
          family, target, paper_config(alpha, StepMode::TrustRegion, diagonal), theta0);
      for (size_t k = 0; k + 1 < traj.records.size(); ++k) {
        const double realized = traj.records[k + 1].cost - traj.records[k].cost;
        const double predicted = traj.records[k].predicted_decrease;
        check.observe(std::abs(realized - predicted) / std::abs(predicted),
                      "alpha=" + std::to_string(alpha) + " iter=" + std::to_string(k));
      }
    }
  }
  return check.finish();
}

PropertyResult opt_speed_ordering(CounterRng& rng, int trials) {
  Check check("opt.speed_ordering", 0.0);
  const RotationFamily base(Eigen::Vector3d(0.5, 0.0, 0.0));
  const MixedFamily family(base, 1e-3);
  const DensityOperator target = mix_with_identity(base.value(VectorR::Zero(3)), 1e-3);
  for (int i = 0; i < trials; ++i) {
    const VectorR theta = random_vector(rng, 3, -3.0, 3.0);
    const DensityOperator rho = family.value(theta);
    const TangentMRep parts = family.partials(theta);
    const VectorR grad = cost_gradient(parts, rho, target);
    if (grad.norm() < 1e-8) continue;
    const MetricMatrix g_fast = regularize_metric(
        quantum_fisher_metric(rho.spectral(), parts, PetzFunction::alpha(0.1)), 1e-3);
    const MetricMatrix g_slow = regularize_metric(
        quantum_fisher_metric(rho.spectral(), parts, PetzFunction::sld()), 1e-3);
    if (!loewner_geq(g_slow, g_fast)) continue;  // order not realized at this theta
    const double tr_fast = qng_step_trust_region(g_fast, grad, 1e-8).predicted_decrease;
    const double tr_slow = qng_step_trust_region(g_slow, grad, 1e-8).predicted_decrease;
    check.observe(tr_fast - tr_slow, "trust-region at trial " + std::to_string(i));
    const double fx_fast = qng_step_fixed(g_fast, grad, 5e-4).predicted_decrease;
    const double fx_slow = qng_step_fixed(g_slow, grad, 5e-4).predicted_decrease;
    check.observe(fx_fast - fx_slow, "fixed-step at trial " + std::to_string(i));
    // same ordering through the diagonal approximation
    const MetricMatrix d_fast = diagonal_metric(g_fast);
    const MetricMatrix d_slow = diagonal_metric(g_slow);
    const double dg_fast = qng_step_fixed(d_fast, grad, 5e-4).predicted_decrease;
    const double dg_slow = qng_step_fixed(d_slow, grad, 5e-4).predicted_decrease;
    check.observe(dg_fast - dg_slow, "diagonal fixed-step at trial " + std::to_string(i));
  }
  return check.finish();
}

PropertyResult opt_determinism() {
  Check check("opt.determinism", 0.0);
  const RotationFamily family(Eigen::Vector3d(0.5, 0.0, 0.0));
  const DensityOperator target = family.value(VectorR::Zero(3));
  const OptimizerConfig cfg = paper_config(0.3, StepMode::TrustRegion, false);
  const Trajectory a = run_optimization(family, target, cfg, paper_theta0());
  const Trajectory b = run_optimization(family, target, cfg, paper_theta0());
  check.require(a.records.size() == b.records.size(), "record counts differ");
  for (size_t k = 0; k < std::min(a.records.size(), b.records.size()); ++k) {
    const bool same = a.records[k].cost == b.records[k].cost &&
                      a.records[k].theta.cwiseEqual(b.records[k].theta).all() &&
                      a.records[k].step.cwiseEqual(b.records[k].step).all() &&
                      a.records[k].predicted_decrease == b.records[k].predicted_decrease;
    check.require(same, "records diverge at iter " + std::to_string(k));
  }
  return check.finish();
}

}  // namespace

std::vector<PropertyResult> run_property_suite(uint64_t seed, int trials) {
  if (trials < 1) throw InvalidParameterError("run_property_suite: trials must be >= 1");
  CounterRng rng(seed);
  std::vector<PropertyResult> results;
  results.push_back(petz_identity_at_one());
  results.push_back(petz_symmetry());
  results.push_back(petz_thm2_beta_monotonicity(rng, trials));
  results.push_back(petz_thm1_extremality());
  results.push_back(petz_singularity_continuity());
  results.push_back(petz_fig1_ordering());
  results.push_back(metrics_thm4_loewner(rng, trials, false));
  results.push_back(metrics_thm4_loewner(rng, trials, true));
  results.push_back(metrics_inverse_order(rng, trials));
  results.push_back(metrics_symmetry(rng, trials));
  results.push_back(metrics_classical_reduction(rng, trials));
  results.push_back(metrics_route_equivalence(rng, trials));
  results.push_back(div_nonnegativity(rng, trials));
  results.push_back(div_commuting_consistency(rng, trials));
  results.push_back(div_eq16_bridge(rng, std::min(trials, 25)));
  results.push_back(div_classical_alpha_independence(rng, std::min(trials, 25)));
  results.push_back(states_spectrum_invariance(rng, trials));
  results.push_back(states_partials_traceless(rng, trials));
  results.push_back(states_partials_fd(rng, trials));
  results.push_back(states_gradient_fd(rng, trials));
  results.push_back(states_cost_nonneg(rng, trials));
  results.push_back(states_mixing_affine(rng, trials));
  results.push_back(opt_constraint_saturation(rng, trials));
  results.push_back(opt_solve_residual(rng, trials));
  results.push_back(opt_descent_prediction(false));
  results.push_back(opt_descent_prediction(true));
  results.push_back(opt_speed_ordering(rng, trials));
  results.push_back(opt_determinism());
  return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

void print_property_report(std::ostream& os, const std::vector<PropertyResult>& results) {
  int passed = 0;
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof(line), "[%s] %-36s max_violation=%.3e tol=%.1e",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_violation, r.tolerance);
    os << line;
    if (!r.passed && !r.detail.empty()) os << "  (" << r.detail << ")";
    os << '\n';
    if (r.passed) ++passed;
  }
  os << passed << "/" << results.size() << " properties passed\n";
}

}  // namespace qnglab
