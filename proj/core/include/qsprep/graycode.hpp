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
#include <vector>

#include "qsprep/gf2.hpp"

namespace qsprep {

/// Ruler function: 1-based index of the lowest set bit of i (1 plus the
/// exponent of 2 in i). i = 0 is an error.
int ruler(uint64_t i);

/// (k,n)-Gray code cycle starting at 0^n: step i flips bit
/// ((ruler(i) + k - 2) mod n) + 1, so bit k flips 2^{n-1} times over the
/// cycle. Bits are 1-based in the definition; the returned BitVectors use
/// 0-based positions as usual.
std::vector<BitVector> gray_cycle(int k, int n);

/// The 2-D string partition driving the copy-register diagonal synthesis.
/// entries is row-major: entry(j,k) = entries[j*cols + k], 0-based.
struct GrayTable {
  int n = 0;       // string width
  int t = 0;       // prefix width, floor(log2(m/2))
  int ell = 0;     // rows, 2^t
  int cols = 0;    // 2^n / ell
  std::vector<BitVector> entries;
  /// flip_index[j*(cols-1) + k] = 0-based bit where entry(j,k) and
  /// entry(j,k+1) differ (always a suffix bit, >= t).
  std::vector<int> flip_index;

  const BitVector& entry(int j, int k) const { return entries[j * cols + k]; }
  int flip(int j, int k) const { return flip_index[j * (cols - 1) + k]; }
};

/// Row j takes prefix = binary(j) and walks its suffixes along the
/// (j', n-t)-Gray cycle with j' = (j mod (n-t)) + 1, which spreads each
/// column's flipped bits evenly across rows.
GrayTable build_gray_table(int n, int m);

/// Cover of {0,1}^{r_t} - {0} by full-rank r_t-element sets.
struct SuffixCover {
  int r_t = 0;
  std::vector<std::vector<BitVector>> sets;
  int ell() const { return static_cast<int>(sets.size()); }
};

/// Parity-check construction: H = [bin(1) ... bin(r_t)], solution sets
/// L^(0), L^(1), neighbourhoods S_x split and extended to bases. Missing
/// basis vectors are added greedily in lexicographic order; exact duplicate
/// sets are removed.
SuffixCover independent_cover(int r_t);

/// First-appearance families F_k. Membership of a full string c.t depends
/// only on the suffix: c.t is in F_k iff k is the first stage whose cover
/// set contains t.
struct FkFamily {
  int r_c = 0;
  int r_t = 0;
  /// Indexed by suffix value (BitVector::to_index); 1-based stage of first
  /// appearance, 0 for the all-zero suffix (never covered).
  std::vector<int> first_stage;

  bool member(uint64_t suffix_value, int k) const {
    return first_stage[suffix_value] == k;
  }
};

FkFamily fk_families(const SuffixCover& cover, int r_c);

}  // namespace qsprep
