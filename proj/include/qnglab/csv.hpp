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

#ifndef QNGLAB_CSV_HPP
#define QNGLAB_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

#include "qnglab/optimizer.hpp"

namespace qnglab {

// 17 significant digits: doubles round-trip, output is byte-stable.
std::string format_csv_double(double v);

// Header `t,alpha,f`; one block per alpha in list order, t ascending on the
// inclusive linear grid [t_min, t_max].
void write_petz_curve_csv(std::ostream& os, const std::vector<double>& alphas, double t_min,
                          double t_max, int samples);

// Header `iter,alpha,cost,grad_norm,step_norm,predicted_decrease`; one block
// per trajectory. A run aborted by a singular metric flushes its rows and
// appends the row `-1,<alpha>,nan,nan,nan,nan`.
void write_trajectories_csv(std::ostream& os, const std::vector<Trajectory>& trajectories);

}  // namespace qnglab

#endif  // QNGLAB_CSV_HPP
