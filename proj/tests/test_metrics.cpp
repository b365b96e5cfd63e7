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

#include "qnglab/classical_ng.hpp"
#include "qnglab/metrics.hpp"
#include "qnglab/random.hpp"
#include "qnglab/states.hpp"
#include "test_helpers.hpp"

using namespace qnglab;
using namespace qnglab::testing;

namespace {

MetricMatrix metric1(double v) {
  MetricMatrix g(1, 1);
  g(0, 0) = v;
  return g;
}

}  // namespace

TEST_CASE("e_representation: maximally mixed state makes the e-rep f independent") {
  const DensityOperator rho(0.5 * identity2());
  const MatrixC xm = 0.5 * pauli_x();
  for (const auto& f : {PetzFunction::sld(), PetzFunction::rrld(), PetzFunction::alpha(0.1)}) {
    const MatrixC e = e_representation(rho.spectral(), xm, f);
    CHECK((e - pauli_x()).norm() <= 1e-12);
  }
}

TEST_CASE("e_representation: hand-evaluated SLD case on diag(0.75, 0.25)") {
  const DensityOperator rho(diag2(0.75, 0.25));
  const MatrixC e = e_representation(rho.spectral(), pauli_x(), PetzFunction::sld());
  MatrixC expected(2, 2);
  expected << 0, 2, 2, 0;
  CHECK((e - expected).norm() <= 1e-12);
}

TEST_CASE("e_representation: requires full rank and Hermitian input") {
  MatrixC singular = MatrixC::Zero(2, 2);
  singular(0, 0) = 1.0;
  const DensityOperator pure(singular);
  CHECK_THROWS_AS(e_representation(pure.spectral(), pauli_x(), PetzFunction::sld()),
                  SingularStateError);
  const DensityOperator rho(0.5 * identity2());
  MatrixC nonherm(2, 2);
  nonherm << 0, 1, 0, 0;
  CHECK_THROWS_AS(e_representation(rho.spectral(), nonherm, PetzFunction::sld()),
                  NotHermitianError);
}

TEST_CASE("quantum_fisher_metric: bernoulli embedded as a diagonal qubit") {
  // classical Fisher information 1/p + 1/(1-p); independent of f on
  // commuting blocks
  for (double p : {0.5, 0.3}) {
    const DensityOperator rho(diag2(p, 1.0 - p));
    TangentMRep parts = {diag2(1.0, -1.0)};
    const double expected = 1.0 / p + 1.0 / (1.0 - p);
    for (const auto& f : {PetzFunction::sld(), PetzFunction::alpha(0.1), PetzFunction::rrld()}) {
      const MetricMatrix g = quantum_fisher_metric(rho.spectral(), parts, f);
      CHECK(g(0, 0) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("quantum_fisher_metric: SLD pair formula on diag(0.75, 0.25) with sigma_x tangent") {
  const DensityOperator rho(diag2(0.75, 0.25));
  TangentMRep parts = {pauli_x()};
  const MetricMatrix g = quantum_fisher_metric(rho.spectral(), parts, PetzFunction::sld());
  // two off-diagonal terms, each 2/(p_i + p_j) = 2
  CHECK(g(0, 0) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("quantum_fisher_metric: hand-derived kernels pin the f dependence") {
  // rho = diag(0.75, 0.25) with sigma_x tangent: both off-diagonal slots
  // contribute 1/(p f(3)) with p f(3) = p_2 f(p_1/p_2) = p_1 f(p_2/p_1)
  const DensityOperator rho(diag2(0.75, 0.25));
  TangentMRep parts = {pauli_x()};
  const double g_rrld =
      quantum_fisher_metric(rho.spectral(), parts, PetzFunction::rrld())(0, 0);
  CHECK(g_rrld == doctest::Approx(5.333333333333333).epsilon(1e-13));  // 2/(0.25 * 1.5)
  const double g_km =
      quantum_fisher_metric(rho.spectral(), parts, PetzFunction::kubo_mori())(0, 0);
  CHECK(g_km == doctest::Approx(4.8546092086764663).epsilon(1e-13));  // 2/(0.25 * 3 ln 3 / 2)
  const double g_01 =
      quantum_fisher_metric(rho.spectral(), parts, PetzFunction::alpha(0.1))(0, 0);
  CHECK(g_01 == doctest::Approx(2.9628626051874933).epsilon(1e-13));
  // larger f means smaller metric: G_{0.1} < G_KM < G_rRLD
  CHECK(g_01 < g_km);
  CHECK(g_km < g_rrld);
}

TEST_CASE("quantum_fisher_metric: route equivalence holds in larger dimensions") {
  CounterRng rng(36);
  // full-rank 8-dimensional state: random pure state mixed with I/N
  VectorC psi(8);
  for (int i = 0; i < 8; ++i) psi[i] = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
  psi.normalize();
  const DensityOperator rho(MatrixC(0.7 * (psi * psi.adjoint()) +
                                    (0.3 / 8.0) * MatrixC::Identity(8, 8)));
  const TangentMRep parts = random_tangent_set(rng, 8, 4);
  for (const auto& f : {PetzFunction::sld(), PetzFunction::alpha(0.1)}) {
    const MetricMatrix a = quantum_fisher_metric(rho.spectral(), parts, f);
    const MetricMatrix b = quantum_fisher_metric_via_erep(rho.spectral(), parts, f);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, a.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("quantum_fisher_metric: maximally mixed state with sigma_z/2 tangent") {
  const DensityOperator rho(0.5 * identity2());
  TangentMRep parts = {0.5 * pauli_z()};
  for (const auto& f : {PetzFunction::sld(), PetzFunction::alpha(-0.3)}) {
    const MetricMatrix g = quantum_fisher_metric(rho.spectral(), parts, f);
    CHECK(g(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("quantum_fisher_metric: agrees with the e-representation trace route") {
  CounterRng rng(31);
  for (int i = 0; i < 25; ++i) {
    const DensityOperator rho = (i % 2 == 0) ? random_qubit_state(rng) : random_qutrit_state(rng);
    const TangentMRep parts = random_tangent_set(rng, static_cast<int>(rho.dim()), 3);
    for (const auto& f :
         {PetzFunction::sld(), PetzFunction::rrld(), PetzFunction::alpha(0.3)}) {
      const MetricMatrix a = quantum_fisher_metric(rho.spectral(), parts, f);
      const MetricMatrix b = quantum_fisher_metric_via_erep(rho.spectral(), parts, f);
      CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, a.cwiseAbs().maxCoeff()));
      CHECK((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
      // PSD within tolerance
      Eigen::SelfAdjointEigenSolver<MatrixR> eig(a, Eigen::EigenvaluesOnly);
      CHECK(eig.eigenvalues().minCoeff() >=
            -1e-9 * std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("diagonal_metric: definition and idempotence") {
  MetricMatrix g(2, 2);
  g << 2, 1, 1, 2;
  const MetricMatrix d = diagonal_metric(g);
  CHECK(d(0, 0) == 2.0);
  CHECK(d(1, 1) == 2.0);
  CHECK(d(0, 1) == 0.0);
  CHECK((diagonal_metric(d) - d).norm() == 0.0);

  MetricMatrix h(2, 2);
  h << 4, -1, -1, 1;
  const MetricMatrix hd = diagonal_metric(h);
  CHECK(hd(0, 0) == 4.0);
  CHECK(hd(1, 1) == 1.0);
}

TEST_CASE("regularize_metric: affine blend with the identity") {
  const MetricMatrix zero = MetricMatrix::Zero(2, 2);
  CHECK((regularize_metric(zero, 1e-3) - 1e-3 * MetricMatrix::Identity(2, 2)).norm() <= 1e-18);
  const MetricMatrix id = MetricMatrix::Identity(3, 3);
  CHECK((regularize_metric(id, 0.42) - id).norm() <= 1e-15);
  MetricMatrix g(2, 2);
  g << 2, 0, 0, 0;
  const MetricMatrix r = regularize_metric(g, 0.001);
  CHECK(r(0, 0) == doctest::Approx(1.999));
  CHECK(r(1, 1) == doctest::Approx(0.001));
  CHECK_THROWS_AS(regularize_metric(g, 1.0), InvalidParameterError);
  CHECK_THROWS_AS(regularize_metric(g, -0.1), InvalidParameterError);
}

TEST_CASE("classical_fisher_metric: bernoulli values") {
  VectorR p(2);
  p << 0.5, 0.5;
  std::vector<VectorR> parts(1, VectorR(2));
  parts[0] << 1.0, -1.0;
  CHECK(classical_fisher_metric(p, parts)(0, 0) == doctest::Approx(4.0).epsilon(1e-12));

  p << 0.75, 0.25;
  CHECK(classical_fisher_metric(p, parts)(0, 0) ==
        doctest::Approx(16.0 / 3.0).epsilon(1e-12));

  VectorR u(4);
  u.setConstant(0.25);
  std::vector<VectorR> zero_parts(1, VectorR::Zero(4));
  CHECK(classical_fisher_metric(u, zero_parts)(0, 0) == 0.0);

  VectorR notnorm(2);
  notnorm << 0.5, 0.6;
  CHECK_THROWS_AS(classical_fisher_metric(notnorm, parts), InvalidDistributionError);
  std::vector<VectorR> notsum(1, VectorR(2));
  notsum[0] << 1.0, 0.5;
  p << 0.5, 0.5;
  CHECK_THROWS_AS(classical_fisher_metric(p, notsum), InvalidDistributionError);
}

TEST_CASE("loewner_geq: basics") {
  const MetricMatrix id = MetricMatrix::Identity(2, 2);
  CHECK(loewner_geq(2.0 * id, id));
  CHECK_FALSE(loewner_geq(id, 2.0 * id));
  CHECK(loewner_geq(id, id));
  CHECK_THROWS_AS(loewner_geq(id, MetricMatrix::Identity(3, 3)), DimensionMismatchError);
}

TEST_CASE("thm 4: petz order on eigenvalue ratios implies loewner order of metrics") {
  CounterRng rng(32);
  const auto pairs = std::vector<std::pair<PetzFunction, PetzFunction>>{
      {PetzFunction::rrld(), PetzFunction::sld()},
      {PetzFunction::alpha(0.1), PetzFunction::sld()},
      {PetzFunction::alpha(0.3), PetzFunction::alpha(0.5)}};
  for (int i = 0; i < 40; ++i) {
    const DensityOperator rho = (i % 2 == 0) ? random_qubit_state(rng) : random_qutrit_state(rng);
    const TangentMRep parts = random_tangent_set(rng, static_cast<int>(rho.dim()), 3);
    for (const auto& [f, g] : pairs) {
      const MetricMatrix gf = quantum_fisher_metric(rho.spectral(), parts, f);
      const MetricMatrix gg = quantum_fisher_metric(rho.spectral(), parts, g);
      const auto ratios = eigenvalue_ratios(rho.eigenvalues());
      if (petz_pointwise_leq(f, g, ratios)) {
        CHECK(loewner_geq(gf, gg));
        // thm 5: the diagonal approximation preserves the implication
        CHECK(loewner_geq(diagonal_metric(gf), diagonal_metric(gg)));
      }
      if (petz_pointwise_leq(g, f, ratios)) {
        CHECK(loewner_geq(gg, gf));
        CHECK(loewner_geq(diagonal_metric(gg), diagonal_metric(gf)));
      }
    }
  }
}

TEST_CASE("inverse order: G >= H iff H^-1 >= G^-1") {
  CounterRng rng(33);
  for (int i = 0; i < 40; ++i) {
    const DensityOperator rho = (i % 2 == 0) ? random_qubit_state(rng) : random_qutrit_state(rng);
    const TangentMRep parts = random_tangent_set(rng, static_cast<int>(rho.dim()), 3);
    const MetricMatrix g = regularize_metric(
        quantum_fisher_metric(rho.spectral(), parts, PetzFunction::alpha(0.1)), 1e-6);
    const MetricMatrix h = regularize_metric(
        quantum_fisher_metric(rho.spectral(), parts, PetzFunction::sld()), 1e-6);
    const MetricMatrix gi = g.inverse();
    const MetricMatrix hi = h.inverse();
    CHECK(loewner_geq(h, g) == loewner_geq(gi, hi));
  }
}

TEST_CASE("classical reduction: commuting families lose the f dependence") {
  const DiagonalSoftmaxFamily family(3);
  CounterRng rng(34);
  for (int i = 0; i < 20; ++i) {
    const VectorR theta = random_vector(rng, 3, -1.5, 1.5);
    const DensityOperator rho = family.value(theta);
    const TangentMRep parts = family.partials(theta);
    const auto [p, dp] = softmax_family(theta);
    const MetricMatrix classical = classical_fisher_metric(p, dp);
    for (double a : {-1.0, 0.1, 0.5, 2.0}) {
      const MetricMatrix quantum =
          quantum_fisher_metric(rho.spectral(), parts, PetzFunction::alpha(a));
      CHECK((quantum - classical).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("metric construction rejects singular states") {
  MatrixC nearly = MatrixC::Zero(2, 2);
  nearly(0, 0) = 1.0 - 1e-15;
  nearly(1, 1) = 1e-15;
  const DensityOperator rho(nearly);
  TangentMRep parts = {pauli_x()};
  CHECK_THROWS_AS(quantum_fisher_metric(rho.spectral(), parts, PetzFunction::sld()),
                  SingularStateError);
}

TEST_CASE("metric matrices stay symmetric under extreme alpha") {
  CounterRng rng(35);
  for (int i = 0; i < 10; ++i) {
    const DensityOperator rho = random_qutrit_state(rng);
    const TangentMRep parts = random_tangent_set(rng, 3, 3);
    for (double a : {0.01, -0.01, 100.0, -100.0}) {
      const MetricMatrix g = quantum_fisher_metric(rho.spectral(), parts, PetzFunction::alpha(a));
      CHECK((g - g.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, g.norm()));
    }
  }
}

TEST_CASE("loewner_geq: tolerance scales with the operands") {
  // identical large matrices with roundoff-sized perturbation still compare
  const MetricMatrix big = 1e8 * MetricMatrix::Identity(3, 3);
  MetricMatrix wiggle = big;
  wiggle(0, 1) = wiggle(1, 0) = 1e-4;
  CHECK(loewner_geq(big, wiggle));
  CHECK(loewner_geq(wiggle, big));
  CHECK(loewner_geq(metric1(2.0), metric1(1.0)));
  CHECK_FALSE(loewner_geq(metric1(1.0), metric1(2.0)));
}
