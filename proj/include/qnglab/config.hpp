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

#ifndef QNGLAB_CONFIG_HPP
#define QNGLAB_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qnglab/optimizer.hpp"
#include "qnglab/types.hpp"

namespace qnglab {

// Flat experiment description; defaults reproduce the reference single-qubit
// setup (bloch [0.5, 0, 0], theta0 = [pi/2, pi/2, pi/4], theta* = 0,
// eps = 1e-8, eta = 5e-4, xi = delta = 1e-3).
struct ExperimentConfig {
  std::string family = "rotation";  // rotation | softmax
  Eigen::Vector3d bloch{0.5, 0.0, 0.0};
  VectorR theta0;
  VectorR theta_star;
  StepMode mode = StepMode::TrustRegion;
  double epsilon = 1e-8;
  double eta = 5e-4;
  std::vector<double> alphas{0.1, 0.3, 0.5};
  double xi = 1e-3;
  double delta = 1e-3;
  bool diagonal = false;
  bool mix_cost = true;
  int max_iters = 1000;
  double grad_tol = 1e-12;
  uint64_t seed = 42;
  int trials = 100;
  std::string out;  // empty = stdout

  // petz-curve sampling
  std::vector<double> curve_alphas{0.1, 0.3, 0.5, 100.0, -100.0, -1.0, -0.3, -0.1};
  double t_min = 0.01;
  double t_max = 5.0;
  int samples = 500;

  ExperimentConfig();

  OptimizerConfig optimizer_config(double alpha) const;
  void validate() const;
};

// One `key = value` per line, `#` starts a comment. Unknown keys are errors.
std::map<std::string, std::string> parse_key_value_file(const std::string& path);
std::map<std::string, std::string> parse_key_value_text(const std::string& text);
void apply_key_values(ExperimentConfig& cfg, const std::map<std::string, std::string>& kv);

std::vector<double> parse_double_list(const std::string& text);
bool parse_bool(const std::string& text);

}  // namespace qnglab

#endif  // QNGLAB_CONFIG_HPP
