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

#ifndef QNGLAB_EXPERIMENTS_HPP
#define QNGLAB_EXPERIMENTS_HPP

#include <vector>

#include "qnglab/config.hpp"
#include "qnglab/optimizer.hpp"

namespace qnglab {

// QNGLAB_THREADS caps sweep parallelism (0 or 1 = serial, unset = hardware).
int sweep_thread_budget(int jobs);

// One optimization run per alpha in cfg.alphas, returned in list order.
// Entries may run in parallel; each trajectory is deterministic on its own.
std::vector<Trajectory> run_alpha_sweep(const ExperimentConfig& cfg);

}  // namespace qnglab

#endif  // QNGLAB_EXPERIMENTS_HPP
