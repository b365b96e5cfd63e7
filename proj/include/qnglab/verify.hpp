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

#ifndef QNGLAB_VERIFY_HPP
#define QNGLAB_VERIFY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qnglab {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double max_violation = 0.0;  // worst observed excess over the tolerance baseline
  double tolerance = 0.0;
  std::string detail;
};

// Every invariant of the petz, metrics, divergences, states and optimizer
// modules, checked on `trials` random instances drawn deterministically from
// `seed`. Failures are report content, not exceptions.
std::vector<PropertyResult> run_property_suite(uint64_t seed, int trials);

bool all_passed(const std::vector<PropertyResult>& results);

// One line per property: [PASS]/[FAIL], name, max violation vs tolerance.
void print_property_report(std::ostream& os, const std::vector<PropertyResult>& results);

}  // namespace qnglab

#endif  // QNGLAB_VERIFY_HPP
