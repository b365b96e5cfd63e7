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

#include "qnglab/experiments.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "qnglab/classical_ng.hpp"
#include "qnglab/errors.hpp"
#include "qnglab/states.hpp"

namespace qnglab {

int sweep_thread_budget(int jobs) {
  if (jobs <= 1) return 1;
  int budget = static_cast<int>(std::thread::hardware_concurrency());
  if (budget < 1) budget = 1;
  if (const char* env = std::getenv("QNGLAB_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 0) {
      budget = (parsed == 0) ? 1 : static_cast<int>(parsed);
    }
  }
  return budget < jobs ? budget : jobs;
}

namespace {

Trajectory run_single(const ExperimentConfig& cfg, double alpha) {
  const OptimizerConfig opt = cfg.optimizer_config(alpha);
  if (cfg.family == "softmax") {
    const VectorR target = softmax_probabilities(cfg.theta_star);
    return run_classical_optimization(target, opt, cfg.theta0);
  }
  const RotationFamily family(cfg.bloch);
  const DensityOperator target = family.value(cfg.theta_star);
  return run_optimization(family, target, opt, cfg.theta0);
}

}  // namespace

std::vector<Trajectory> run_alpha_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const int jobs = static_cast<int>(cfg.alphas.size());
  std::vector<Trajectory> results(static_cast<size_t>(jobs));
  const int threads = sweep_thread_budget(jobs);

  if (threads <= 1) {
    for (int i = 0; i < jobs; ++i) {
      results[static_cast<size_t>(i)] = run_single(cfg, cfg.alphas[static_cast<size_t>(i)]);
    }
    return results;
  }

  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= jobs) return;
      try {
        results[static_cast<size_t>(i)] = run_single(cfg, cfg.alphas[static_cast<size_t>(i)]);
      } catch (...) {
        errors[static_cast<size_t>(i)] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return results;
}

}  // namespace qnglab
