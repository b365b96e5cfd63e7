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

#include "qnglab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qnglab/errors.hpp"

namespace qnglab {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& key) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InvalidParameterError("config: cannot parse '" + text + "' as a number for key '" +
                                key + "'");
  }
}

long parse_long(const std::string& text, const std::string& key) {
  try {
    size_t pos = 0;
    const long v = std::stol(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InvalidParameterError("config: cannot parse '" + text + "' as an integer for key '" +
                                key + "'");
  }
}

VectorR to_vector(const std::vector<double>& values) {
  VectorR v(static_cast<Eigen::Index>(values.size()));
  for (size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return v;
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
  theta0 = to_vector({M_PI / 2.0, M_PI / 2.0, M_PI / 4.0});
  theta_star = to_vector({0.0, 0.0, 0.0});
}

OptimizerConfig ExperimentConfig::optimizer_config(double alpha) const {
  OptimizerConfig cfg;
  cfg.mode = mode;
  cfg.epsilon = epsilon;
  cfg.eta = eta;
  cfg.petz = PetzFunction::alpha(alpha);
  cfg.xi = xi;
  cfg.delta = delta;
  cfg.diagonal = diagonal;
  cfg.mix_cost = mix_cost;
  cfg.max_iters = max_iters;
  cfg.grad_tol = grad_tol;
  return cfg;
}

void ExperimentConfig::validate() const {
  if (family != "rotation" && family != "softmax") {
    throw InvalidParameterError("config: family must be 'rotation' or 'softmax'");
  }
  if (alphas.empty()) throw InvalidParameterError("config: alpha list must be nonempty");
  for (double a : alphas) {
    if (!std::isfinite(a) || a == 0.0) {
      throw InvalidParameterError("config: alpha values must be finite and nonzero");
    }
  }
  if (theta0.size() != theta_star.size()) {
    throw InvalidParameterError("config: theta0 and theta_star lengths differ");
  }
  if (family == "rotation" && theta0.size() != 3) {
    throw InvalidParameterError("config: rotation family needs 3 parameters");
  }
  if (family == "softmax" && theta0.size() < 2) {
    throw InvalidParameterError("config: softmax family needs at least 2 parameters");
  }
  if (!(t_min > 0.0) || !(t_max > t_min) || samples < 2) {
    throw InvalidParameterError("config: need 0 < t_min < t_max and samples >= 2");
  }
  if (trials < 1) throw InvalidParameterError("config: trials must be >= 1");
  optimizer_config(alphas.front()).validate();
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw InvalidParameterError("config: empty entry in list '" + text + "'");
    }
    values.push_back(parse_double(item, "list"));
  }
  if (values.empty()) throw InvalidParameterError("config: empty list");
  return values;
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw InvalidParameterError("config: cannot parse '" + text + "' as a boolean");
}

std::map<std::string, std::string> parse_key_value_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidParameterError("config: line " + std::to_string(lineno) +
                                  " is not of the form 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw InvalidParameterError("config: empty key on line " + std::to_string(lineno));
    }
    kv[key] = value;
  }
  return kv;
}

std::map<std::string, std::string> parse_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_key_value_text(buffer.str());
}

void apply_key_values(ExperimentConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "family") {
      cfg.family = value;
    } else if (key == "bloch") {
      const auto v = parse_double_list(value);
      if (v.size() != 3) throw InvalidParameterError("config: bloch needs 3 components");
      cfg.bloch = Eigen::Vector3d(v[0], v[1], v[2]);
    } else if (key == "theta0") {
      cfg.theta0 = to_vector(parse_double_list(value));
    } else if (key == "theta_star") {
      cfg.theta_star = to_vector(parse_double_list(value));
    } else if (key == "mode") {
      if (value == "trust") {
        cfg.mode = StepMode::TrustRegion;
      } else if (value == "fixed") {
        cfg.mode = StepMode::FixedStep;
      } else {
        throw InvalidParameterError("config: mode must be 'trust' or 'fixed'");
      }
    } else if (key == "epsilon") {
      cfg.epsilon = parse_double(value, key);
    } else if (key == "eta") {
      cfg.eta = parse_double(value, key);
    } else if (key == "alpha") {
      cfg.alphas = parse_double_list(value);
    } else if (key == "curve_alpha") {
      cfg.curve_alphas = parse_double_list(value);
    } else if (key == "xi") {
      cfg.xi = parse_double(value, key);
    } else if (key == "delta") {
      cfg.delta = parse_double(value, key);
    } else if (key == "diagonal") {
      cfg.diagonal = parse_bool(value);
    } else if (key == "mix_cost") {
      cfg.mix_cost = parse_bool(value);
    } else if (key == "max_iters") {
      cfg.max_iters = static_cast<int>(parse_long(value, key));
    } else if (key == "grad_tol") {
      cfg.grad_tol = parse_double(value, key);
    } else if (key == "seed") {
      cfg.seed = static_cast<uint64_t>(parse_long(value, key));
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_long(value, key));
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "t_min") {
      cfg.t_min = parse_double(value, key);
    } else if (key == "t_max") {
      cfg.t_max = parse_double(value, key);
    } else if (key == "samples") {
      cfg.samples = static_cast<int>(parse_long(value, key));
    } else {
      throw InvalidParameterError("config: unknown key '" + key + "'");
    }
  }
}

}  // namespace qnglab
