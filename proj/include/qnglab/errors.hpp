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

#ifndef QNGLAB_ERRORS_HPP
#define QNGLAB_ERRORS_HPP

#include <stdexcept>

namespace qnglab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct InvalidParameterError : Error {
  using Error::Error;
};

struct InvalidStateError : Error {
  using Error::Error;
};

struct SingularStateError : Error {
  using Error::Error;
};

struct InvalidDistributionError : Error {
  using Error::Error;
};

struct InvalidBlochVectorError : Error {
  using Error::Error;
};

struct SingularMetricError : Error {
  using Error::Error;
};

// Thrown by the step rules when the gradient term vanishes; the driver treats
// it as successful convergence, not as a failure.
struct VanishingGradientError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace qnglab

#endif  // QNGLAB_ERRORS_HPP
