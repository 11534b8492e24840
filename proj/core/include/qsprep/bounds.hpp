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

#include <cstdint>
#include <string>

namespace qsprep {

/// Raw formula values (big-O constants suppressed) for the depth bounds of
/// state preparation and general unitary synthesis at a given qubit and
/// ancilla count.
struct BoundsRecord {
  uint32_t n = 0;
  uint64_t m = 0;
  double qsp_lower = 0;            // max(n, 2^n/(m+n))
  std::string qsp_upper_regime;    // regime row selected for (n, m)
  double unitary_lower = 0;        // max(n, 4^n/(m+n))
  double unitary_upper = 0;        // n 2^n + 4^n/(m+n)
};

BoundsRecord bounds(uint32_t n, uint64_t m);

}  // namespace qsprep
