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

#ifndef QNGLAB_RANDOM_HPP
#define QNGLAB_RANDOM_HPP

#include <cmath>
#include <complex>
#include <cstdint>

#include "qnglab/states.hpp"
#include "qnglab/types.hpp"

namespace qnglab {

// SplitMix64 finalizer over (seed, counter): output_k = mix(seed + k * GAMMA).
// Counter-based, so any implementation in any language reproduces the stream
// exactly from the same seed.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t next_u64() {
    uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) from the top 53 bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Box-Muller; draws two uniforms per call.
  double next_gaussian() {
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

// Uniform in the closed ball of the given radius (rejection from the cube).
inline Eigen::Vector3d random_bloch_in_ball(CounterRng& rng, double radius = 0.9) {
  for (;;) {
    Eigen::Vector3d v(rng.next_uniform(-1, 1), rng.next_uniform(-1, 1), rng.next_uniform(-1, 1));
    if (v.squaredNorm() <= 1.0) return radius * v;
  }
}

// Full-rank qubit state: Bloch vector uniform in the ball of radius 0.9.
inline DensityOperator random_qubit_state(CounterRng& rng) {
  const Eigen::Vector3d b = random_bloch_in_ball(rng);
  MatrixC rho(2, 2);
  rho << std::complex<double>(0.5 * (1.0 + b.z()), 0.0),
      std::complex<double>(0.5 * b.x(), -0.5 * b.y()),
      std::complex<double>(0.5 * b.x(), 0.5 * b.y()),
      std::complex<double>(0.5 * (1.0 - b.z()), 0.0);
  return DensityOperator(rho);
}

// Full-rank qutrit state: 0.8 |psi><psi| + 0.2 I/3 for a Haar-ish random pure
// state from normalized complex Gaussians.
inline DensityOperator random_qutrit_state(CounterRng& rng) {
  VectorC psi(3);
  for (int i = 0; i < 3; ++i) {
    psi[i] = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
  }
  psi.normalize();
  MatrixC rho = 0.8 * (psi * psi.adjoint()) + (0.2 / 3.0) * MatrixC::Identity(3, 3);
  return DensityOperator(rho);
}

inline MatrixC random_hermitian(CounterRng& rng, int dim) {
  MatrixC m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
    }
  }
  return MatrixC(0.5 * (m + m.adjoint().eval()));
}

inline MatrixC random_traceless_hermitian(CounterRng& rng, int dim) {
  MatrixC m = random_hermitian(rng, dim);
  m -= (m.trace() / static_cast<double>(dim)) * MatrixC::Identity(dim, dim);
  return m;
}

// A set of random Hermitian traceless tangent directions (m-representations).
inline TangentMRep random_tangent_set(CounterRng& rng, int dim, int count) {
  TangentMRep out;
  out.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(random_traceless_hermitian(rng, dim));
  return out;
}

inline VectorR random_vector(CounterRng& rng, int n, double lo, double hi) {
  VectorR v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.next_uniform(lo, hi);
  return v;
}

}  // namespace qnglab

#endif  // QNGLAB_RANDOM_HPP
