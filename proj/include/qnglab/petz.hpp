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

#ifndef QNGLAB_PETZ_HPP
#define QNGLAB_PETZ_HPP

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qnglab/errors.hpp"

namespace qnglab {

enum class PetzKind { Alpha, SLD, RRLD, KuboMori };

namespace detail {

// t ln(t) / (t - 1): the alpha -> +-inf member of the family.
inline double kubo_mori_limit(double t) {
  if (t == 1.0) return 1.0;
  return t * std::log(t) / (t - 1.0);
}

// (t - 1) / ln(t): the alpha -> 1 member of the family.
inline double alpha_one_limit(double t) {
  if (t == 1.0) return 1.0;
  return (t - 1.0) / std::log(t);
}

inline double log_abs_expm1(double x) {
  if (x >= 700.0) return x;
  if (x <= -700.0) return 0.0;
  return std::log(std::abs(std::expm1(x)));
}

// expm1(a)/expm1(b), falling back to log-domain evaluation when either
// argument would overflow exp.
inline double expm1_ratio(double a, double b) {
  if (std::abs(a) < 700.0 && std::abs(b) < 700.0) {
    return std::expm1(a) / std::expm1(b);
  }
  const double sign = ((a > 0.0) == (b > 0.0)) ? 1.0 : -1.0;
  return sign * std::exp(log_abs_expm1(a) - log_abs_expm1(b));
}

}  // namespace detail

// Scalar family f_alpha(t) = (1 - alpha)(1 - t^{1/alpha})/(1 - t^{(1-alpha)/alpha})
// together with the named presets
//   SLD      f(t) = (1 + t)/2        (= f_{1/2}, maximal monotone member)
//   rRLD     f(t) = 2t/(1 + t)       (= f_{-1}, minimal monotone member)
//   KuboMori f(t) = t ln(t)/(t - 1)  (alpha -> +-inf limit)
// Every member satisfies f(1) = 1, f(t) = t f(1/t) and f(t) > 0 for t > 0.
class PetzFunction {
 public:
  // |alpha| beyond this routes to the Kubo-Mori limit, whose distance to
  // f_alpha is O(1/alpha).
  static constexpr double kAlphaCap = 1e6;

  static PetzFunction alpha(double a) {
    if (!std::isfinite(a) || a == 0.0) {
      throw InvalidParameterError("PetzFunction: alpha must be finite and nonzero");
    }
    return PetzFunction(PetzKind::Alpha, a);
  }
  static PetzFunction sld() { return PetzFunction(PetzKind::SLD, 0.5); }
  static PetzFunction rrld() { return PetzFunction(PetzKind::RRLD, -1.0); }
  static PetzFunction kubo_mori() {
    return PetzFunction(PetzKind::KuboMori, std::numeric_limits<double>::infinity());
  }

  PetzKind kind() const { return kind_; }

  // Canonical alpha label: 0.5 for SLD, -1 for rRLD, +inf for KuboMori.
  double alpha_value() const { return alpha_; }

  double operator()(double t) const;

  std::string name() const {
    switch (kind_) {
      case PetzKind::SLD:      return "SLD";
      case PetzKind::RRLD:     return "rRLD";
      case PetzKind::KuboMori: return "KuboMori";
      case PetzKind::Alpha:    return "alpha=" + std::to_string(alpha_);
    }
    return "?";
  }

 private:
  PetzFunction(PetzKind kind, double a) : kind_(kind), alpha_(a) {}

  PetzKind kind_;
  double alpha_;
};

inline double petz_eval(const PetzFunction& f, double t) {
  if (!std::isfinite(t) || t <= 0.0) {
    throw InvalidParameterError("petz_eval: t must be a positive finite real");
  }
  switch (f.kind()) {
    case PetzKind::SLD:
      return 0.5 * (1.0 + t);
    case PetzKind::RRLD:
      return 2.0 * t / (1.0 + t);
    case PetzKind::KuboMori:
      return detail::kubo_mori_limit(t);
    case PetzKind::Alpha: {
      const double a = f.alpha_value();
      if (std::abs(a) >= PetzFunction::kAlphaCap) return detail::kubo_mori_limit(t);
      if (a == 1.0) return detail::alpha_one_limit(t);
      if (t == 1.0) return 1.0;
      // 1 - t^x = -expm1(x ln t); both singular factors stay accurate near
      // t = 1 and near a = 1 this way.
      const double lt = std::log(t);
      const double ea = lt / a;
      const double eb = (1.0 - a) * lt / a;  // ea - eb = lt
      // when both exponents saturate, the ratio collapses to its limit
      // (corrections below 1e-300); this also covers ea, eb = +-inf
      if (ea >= 700.0 && eb >= 700.0) return (1.0 - a) * t;
      if (ea <= -700.0 && eb <= -700.0) return 1.0 - a;
      return (1.0 - a) * detail::expm1_ratio(ea, eb);
    }
  }
  throw InvalidParameterError("petz_eval: unknown kind");
}

inline double PetzFunction::operator()(double t) const { return petz_eval(*this, t); }

inline constexpr double kPetzOrderSlack = 1e-12;

// Numerical witness of f <= g on a finite grid; not a proof over all t > 0.
inline bool petz_pointwise_leq(const PetzFunction& f, const PetzFunction& g,
                               std::span<const double> grid) {
  if (grid.empty()) {
    throw InvalidParameterError("petz_pointwise_leq: grid must be nonempty");
  }
  for (double t : grid) {
    if (petz_eval(f, t) > petz_eval(g, t) + kPetzOrderSlack) return false;
  }
  return true;
}

// f_alpha is operator monotone iff alpha in (-inf, -1] u [1/2, inf).
inline bool is_in_monotone_window(double alpha) {
  if (!std::isfinite(alpha) || alpha == 0.0) {
    throw InvalidParameterError("is_in_monotone_window: alpha must be finite and nonzero");
  }
  return alpha <= -1.0 || alpha >= 0.5;
}

inline std::vector<double> log_spaced_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw InvalidParameterError("log_spaced_grid: need 0 < lo < hi and count >= 2");
  }
  std::vector<double> grid(static_cast<size_t>(count));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i) {
    grid[static_cast<size_t>(i)] = std::exp(llo + (lhi - llo) * i / (count - 1));
  }
  return grid;
}

// 512 log-spaced points on [1e-3, 1e3]: the default witness grid for order
// claims.
inline std::vector<double> default_order_grid() { return log_spaced_grid(1e-3, 1e3, 512); }

}  // namespace qnglab

#endif  // QNGLAB_PETZ_HPP
