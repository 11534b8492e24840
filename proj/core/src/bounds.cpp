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

#include "qsprep/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qsprep/errors.hpp"

namespace qsprep {

BoundsRecord bounds(uint32_t n, uint64_t m) {
  if (n < 1) throw ValidationError("bounds needs n >= 1");
  BoundsRecord r;
  r.n = n;
  r.m = m;
  const double p2 = std::ldexp(1.0, static_cast<int>(n));   // 2^n
  const double p4 = std::ldexp(1.0, static_cast<int>(2 * n));  // 4^n
  const double dm = static_cast<double>(m);
  r.qsp_lower = std::max<double>(n, p2 / (dm + n));
  r.unitary_lower = std::max<double>(n, p4 / (dm + n));
  r.unitary_upper = n * p2 + p4 / (dm + n);
  const double logn = std::log2(std::max<uint32_t>(n, 2));
  if (dm >= p2)
    r.qsp_upper_regime = "Theta(n)";
  else if (dm * n * logn <= p2)
    r.qsp_upper_regime = "Theta(2^n/(m+n))";
  else
    r.qsp_upper_regime = "[Omega(n), O(n log n)]";
  return r;
}

}  // namespace qsprep
