// Copyright 2026 The qsprep developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qsprep {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad dimensions, non-unit vectors, out-of-range indices,
/// unknown format labels.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Ancilla budget outside the admissible range of the requested construction.
struct RegimeError : Error {
  explicit RegimeError(const std::string& msg) : Error(msg) {}
};

struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

/// Raised by the verification engines, e.g. when a caller-supplied support
/// cap is exceeded during sparse simulation.
struct SimulationError : Error {
  explicit SimulationError(const std::string& msg) : Error(msg) {}
};

}  // namespace qsprep
