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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qnglab/config.hpp"
#include "qnglab/csv.hpp"
#include "qnglab/errors.hpp"
#include "qnglab/experiments.hpp"
#include "qnglab/verify.hpp"

namespace {

struct FlagOverrides {
  std::string config_path;
  std::string alpha;
  std::string mode;
  double epsilon = 0, eta = 0, xi = 0, delta = 0, t_min = 0, t_max = 0, grad_tol = 0;
  int max_iters = 0, samples = 0, trials = 0;
  long seed = 0;
  bool diagonal = false;
  std::string family;
  std::string bloch, theta0, theta_star;
  std::string out;
};

// Config file first, explicit flags win.
void add_common_options(CLI::App* cmd, FlagOverrides& f) {
  cmd->add_option("--config", f.config_path, "flat key = value config file");
  cmd->add_option("--alpha", f.alpha, "comma-separated alpha list");
  cmd->add_option("--out", f.out, "output path (default stdout)");
}

void add_optimize_options(CLI::App* cmd, FlagOverrides& f) {
  cmd->add_option("--family", f.family, "state family: rotation | softmax");
  cmd->add_option("--mode", f.mode, "update rule: trust | fixed");
  cmd->add_option("--epsilon", f.epsilon, "trust-region radius");
  cmd->add_option("--eta", f.eta, "fixed step size");
  cmd->add_option("--xi", f.xi, "metric regularizer in [0,1)");
  cmd->add_option("--delta", f.delta, "state regularizer in [0,1)");
  cmd->add_flag("--diagonal", f.diagonal, "use the diagonal metric approximation");
  cmd->add_option("--max-iters", f.max_iters, "iteration budget");
  cmd->add_option("--grad-tol", f.grad_tol, "gradient-norm stopping tolerance");
  cmd->add_option("--bloch", f.bloch, "initial Bloch vector x,y,z");
  cmd->add_option("--theta0", f.theta0, "initial parameters");
  cmd->add_option("--theta-star", f.theta_star, "target parameters");
  cmd->add_option("--seed", f.seed, "rng seed (recorded in config echoes)");
}

qnglab::ExperimentConfig build_config(const CLI::App* cmd, const FlagOverrides& f) {
  qnglab::ExperimentConfig cfg;
  if (!f.config_path.empty()) {
    qnglab::apply_key_values(cfg, qnglab::parse_key_value_file(f.config_path));
  }
  std::map<std::string, std::string> kv;
  auto given = [&](const char* flag) {
    const CLI::Option* opt = cmd->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  auto set_if = [&](const char* flag, const char* key, const std::string& value) {
    if (given(flag)) kv[key] = value;
  };
  set_if("--alpha", "alpha", f.alpha);
  set_if("--family", "family", f.family);
  set_if("--mode", "mode", f.mode);
  set_if("--epsilon", "epsilon", std::to_string(f.epsilon));
  set_if("--eta", "eta", std::to_string(f.eta));
  set_if("--xi", "xi", std::to_string(f.xi));
  set_if("--delta", "delta", std::to_string(f.delta));
  set_if("--max-iters", "max_iters", std::to_string(f.max_iters));
  set_if("--grad-tol", "grad_tol", qnglab::format_csv_double(f.grad_tol));
  set_if("--bloch", "bloch", f.bloch);
  set_if("--theta0", "theta0", f.theta0);
  set_if("--theta-star", "theta_star", f.theta_star);
  set_if("--seed", "seed", std::to_string(f.seed));
  set_if("--trials", "trials", std::to_string(f.trials));
  set_if("--t-min", "t_min", qnglab::format_csv_double(f.t_min));
  set_if("--t-max", "t_max", qnglab::format_csv_double(f.t_max));
  set_if("--samples", "samples", std::to_string(f.samples));
  set_if("--out", "out", f.out);
  if (given("--diagonal")) kv["diagonal"] = "true";
  qnglab::apply_key_values(cfg, kv);
  // --eta alone selects the fixed-step rule unless --mode was explicit
  if (!given("--mode") && given("--eta") && !given("--epsilon")) {
    cfg.mode = qnglab::StepMode::FixedStep;
  }
  return cfg;
}

int write_output(const qnglab::ExperimentConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw qnglab::IoError("cannot open output file '" + cfg.out + "'");
  file << text;
  if (!file) throw qnglab::IoError("failed writing output file '" + cfg.out + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qnglab: quantum natural gradient with generalized Petz-function metrics"};
  app.require_subcommand(1);

  FlagOverrides curve_flags, opt_flags, verify_flags;

  CLI::App* curve = app.add_subcommand(
      "petz-curve", "tabulate f_alpha(t) over a t grid as CSV (t,alpha,f)");
  add_common_options(curve, curve_flags);
  curve->add_option("--t-min", curve_flags.t_min, "left end of the t grid (> 0)");
  curve->add_option("--t-max", curve_flags.t_max, "right end of the t grid");
  curve->add_option("--samples", curve_flags.samples, "number of grid points");

  CLI::App* optimize = app.add_subcommand(
      "optimize", "run a QNG alpha-sweep, CSV (iter,alpha,cost,grad_norm,step_norm,predicted_decrease)");
  add_common_options(optimize, opt_flags);
  add_optimize_options(optimize, opt_flags);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the module property suite on deterministic random instances");
  verify->add_option("--config", verify_flags.config_path, "flat key = value config file");
  verify->add_option("--seed", verify_flags.seed, "base seed for the instance stream");
  verify->add_option("--trials", verify_flags.trials, "random instances per property");
  verify->add_option("--out", verify_flags.out, "report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (curve->parsed()) {
      qnglab::ExperimentConfig cfg = build_config(curve, curve_flags);
      if (curve->count("--alpha") > 0) cfg.curve_alphas = cfg.alphas;
      cfg.validate();
      std::ostringstream os;
      qnglab::write_petz_curve_csv(os, cfg.curve_alphas, cfg.t_min, cfg.t_max, cfg.samples);
      return write_output(cfg, os.str());
    }
    if (optimize->parsed()) {
      qnglab::ExperimentConfig cfg = build_config(optimize, opt_flags);
      cfg.validate();
      const auto trajectories = qnglab::run_alpha_sweep(cfg);
      std::ostringstream os;
      qnglab::write_trajectories_csv(os, trajectories);
      const int rc = write_output(cfg, os.str());
      for (const auto& traj : trajectories) {
        if (traj.reason == qnglab::TerminationReason::SingularMetric) {
          std::cerr << "error: run alpha=" << traj.alpha_label
                    << " aborted: " << traj.error_message << "\n";
          return 1;
        }
      }
      return rc;
    }
    if (verify->parsed()) {
      qnglab::ExperimentConfig cfg;
      if (!verify_flags.config_path.empty()) {
        qnglab::apply_key_values(cfg, qnglab::parse_key_value_file(verify_flags.config_path));
      }
      if (verify->count("--seed") > 0) cfg.seed = static_cast<uint64_t>(verify_flags.seed);
      if (verify->count("--trials") > 0) cfg.trials = verify_flags.trials;
      if (verify->count("--out") > 0) cfg.out = verify_flags.out;
      if (cfg.trials < 1) throw qnglab::InvalidParameterError("verify: trials must be >= 1");
      const auto results = qnglab::run_property_suite(cfg.seed, cfg.trials);
      std::ostringstream os;
      os << "verify: seed=" << cfg.seed << " trials=" << cfg.trials << "\n";
      qnglab::print_property_report(os, results);
      write_output(cfg, os.str());
      return qnglab::all_passed(results) ? 0 : 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
