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

#include "qsprep/graycode.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace qsprep {

int ruler(uint64_t i) {
  if (i == 0) throw ValidationError("ruler function undefined at 0");
  return std::countr_zero(i) + 1;
}

std::vector<BitVector> gray_cycle(int k, int n) {
  if (n < 1 || k < 1 || k > n) throw ValidationError("gray_cycle needs 1 <= k <= n");
  std::vector<BitVector> out;
  out.reserve(size_t{1} << n);
  BitVector cur(n);
  out.push_back(cur);
  for (uint64_t i = 1; i < (uint64_t{1} << n); ++i) {
    const int bit = (ruler(i) + k - 2) % n;  // 0-based
    cur.flip(bit);
    out.push_back(cur);
  }
  return out;
}

GrayTable build_gray_table(int n, int m) {
  if (n < 2) throw ValidationError("gray table needs n >= 2");
  if (m < 2 * n) throw RegimeError("gray table needs m >= 2n");
  m = 2 * (m / 2);
  int t = 0;
  while ((4 << t) <= m) ++t;  // t = floor(log2(m/2))
  if (t > n - 1) t = n - 1;   // keep a non-empty suffix
  GrayTable g;
  g.n = n;
  g.t = t;
  g.ell = 1 << t;
  g.cols = 1 << (n - t);
  g.entries.reserve(static_cast<size_t>(g.ell) * g.cols);
  g.flip_index.reserve(static_cast<size_t>(g.ell) * (g.cols - 1));
  for (int j = 0; j < g.ell; ++j) {
    const int jp = (j % (n - t)) + 1;
    const auto suffixes = gray_cycle(jp, n - t);
    for (int k = 0; k < g.cols; ++k) {
      BitVector s(n);
      for (int b = 0; b < t; ++b)
        if ((j >> (t - 1 - b)) & 1) s.set(b, true);
      for (int b = 0; b < n - t; ++b)
        if (suffixes[k].get(b)) s.set(t + b, true);
      g.entries.push_back(std::move(s));
    }
    for (int k = 0; k + 1 < g.cols; ++k) {
      const int step_bit = (ruler(uint64_t(k) + 1) + jp - 2) % (n - t);
      g.flip_index.push_back(t + step_bit);
    }
  }
  return g;
}

namespace {

// Greedily pick vectors from `pool` (in order) that are linearly independent
// of `base`, until base reaches `target` vectors. Returns false if the pool
// is exhausted first.
bool extend_basis(std::vector<BitVector>& base, const std::vector<BitVector>& pool,
                  size_t target) {
  for (const BitVector& cand : pool) {
    if (base.size() >= target) break;
    if (!cand.any()) continue;
    std::vector<BitVector> trial = base;
    trial.push_back(cand);
    if (rank(BitMatrix::from_rows(trial)) == trial.size()) base = std::move(trial);
  }
  return base.size() >= target;
}

}  // namespace

SuffixCover independent_cover(int r_t) {
  if (r_t < 1) throw ValidationError("independent_cover needs r_t >= 1");
  const int n = r_t;
  SuffixCover cover;
  cover.r_t = r_t;

  // All nonzero vectors in lexicographic order, reused for basis extension.
  std::vector<BitVector> lex;
  lex.reserve((size_t{1} << n) - 1);
  for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
    BitVector b = BitVector::from_index(v, n);
    // from_index maps the integer's MSB to position 0; lexicographic order of
    // the string form is ascending index order.
    if (b.any()) lex.push_back(std::move(b));
  }
  std::sort(lex.begin(), lex.end());

  // Parity-check matrix H = [bin(1), ..., bin(n)], k x n with
  // k = ceil(log2(n+1)); column j is the LSB-first binary expansion of j+1.
  int k = 0;
  while ((1 << k) < n + 1) ++k;
  BitMatrix H(k, n);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < k; ++row)
      if (((col + 1) >> row) & 1) H.set(row, col, true);

  auto syndrome = [&](const BitVector& x) {
    BitVector s(k);
    for (int row = 0; row < k; ++row) s.set(row, H.row(row).dot(x));
    return s;
  };
  BitVector all_ones(k);
  for (int i = 0; i < k; ++i) all_ones.set(i, true);

  std::vector<BitVector> L;  // L^(0) followed by L^(1)
  for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
    BitVector x = BitVector::from_index(v, n);
    BitVector s = syndrome(x);
    if (!s.any() || s == all_ones) L.push_back(std::move(x));
  }

  std::vector<std::vector<BitVector>> sets;
  {
    // S_{0^n} = {e_1, ..., e_n}.
    std::vector<BitVector> unit;
    for (int i = 0; i < n; ++i) {
      BitVector e(n);
      e.set(i, true);
      unit.push_back(std::move(e));
    }
    sets.push_back(std::move(unit));
  }
  for (const BitVector& x : L) {
    if (!x.any()) continue;
    std::vector<BitVector> Sx;
    for (int i = 0; i < n; ++i) {
      BitVector y = x;
      y.flip(i);
      Sx.push_back(std::move(y));
    }
    // S_x^(0): n-1 linearly independent vectors picked from S_x in order.
    std::vector<BitVector> s0;
    if (!extend_basis(s0, Sx, n - 1))
      throw Error("cover construction: rank of S_x dropped below n-1");
    // S_x^(1) = (S_x - S_x^(0) - {0}) u {x}.
    std::vector<BitVector> s1;
    for (const BitVector& y : Sx) {
      if (!y.any()) continue;
      if (std::find(s0.begin(), s0.end(), y) == s0.end()) s1.push_back(y);
    }
    s1.push_back(x);
    extend_basis(s0, lex, n);
    extend_basis(s1, lex, n);
    if (s0.size() != size_t(n) || s1.size() != size_t(n))
      throw Error("cover construction: could not extend to a basis");
    sets.push_back(std::move(s0));
    sets.push_back(std::move(s1));
  }

  // Drop exact duplicate sets (compare as unordered sets).
  std::set<std::vector<BitVector>> seen;
  for (auto& s : sets) {
    std::vector<BitVector> key = s;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) cover.sets.push_back(std::move(s));
  }
  return cover;
}

FkFamily fk_families(const SuffixCover& cover, int r_c) {
  if (r_c < 0) throw ValidationError("fk_families needs r_c >= 0");
  FkFamily fam;
  fam.r_c = r_c;
  fam.r_t = cover.r_t;
  fam.first_stage.assign(size_t{1} << cover.r_t, 0);
  for (int k = 0; k < cover.ell(); ++k) {
    for (const BitVector& t : cover.sets[k]) {
      const uint64_t idx = t.to_index();
      if (fam.first_stage[idx] == 0) fam.first_stage[idx] = k + 1;
    }
  }
  return fam;
}

}  // namespace qsprep
