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

#include "qnglab/csv.hpp"

#include <cmath>
#include <cstdio>

#include "qnglab/errors.hpp"
#include "qnglab/petz.hpp"

namespace qnglab {

std::string format_csv_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_petz_curve_csv(std::ostream& os, const std::vector<double>& alphas, double t_min,
                          double t_max, int samples) {
  if (!(t_min > 0.0) || !(t_max > t_min) || samples < 2) {
    throw InvalidParameterError("write_petz_curve_csv: need 0 < t_min < t_max, samples >= 2");
  }
  os << "t,alpha,f\n";
  for (double a : alphas) {
    const PetzFunction f = PetzFunction::alpha(a);
    for (int k = 0; k < samples; ++k) {
      const double t = t_min + (t_max - t_min) * k / (samples - 1);
      os << format_csv_double(t) << ',' << format_csv_double(a) << ','
         << format_csv_double(petz_eval(f, t)) << '\n';
    }
  }
}

void write_trajectories_csv(std::ostream& os, const std::vector<Trajectory>& trajectories) {
  os << "iter,alpha,cost,grad_norm,step_norm,predicted_decrease\n";
  for (const Trajectory& traj : trajectories) {
    const std::string alpha = format_csv_double(traj.alpha_label);
    for (const IterationRecord& rec : traj.records) {
      os << rec.iter << ',' << alpha << ',' << format_csv_double(rec.cost) << ','
         << format_csv_double(rec.grad_norm) << ',' << format_csv_double(rec.step.norm()) << ','
         << format_csv_double(rec.predicted_decrease) << '\n';
    }
    if (traj.reason == TerminationReason::SingularMetric) {
      os << "-1," << alpha << ",nan,nan,nan,nan\n";
    }
  }
}

}  // namespace qnglab
