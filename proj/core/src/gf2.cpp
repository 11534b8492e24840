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

#include "qsprep/gf2.hpp"

namespace qsprep {

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i, true);
    else if (s[i] != '0')
      throw ValidationError("bit string must contain only 0/1");
  }
  return v;
}

BitVector BitVector::from_index(uint64_t index, size_t len) {
  if (len > 64) throw ValidationError("from_index supports at most 64 bits");
  if (len < 64 && (index >> len) != 0)
    throw ValidationError("index does not fit in the requested width");
  BitVector v(len);
  for (size_t i = 0; i < len; ++i)
    if ((index >> (len - 1 - i)) & 1) v.set(i, true);
  return v;
}

void BitVector::xor_with(const BitVector& o) {
  if (o.len_ != len_) throw ValidationError("BitVector length mismatch");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

bool BitVector::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

size_t BitVector::popcount() const {
  size_t n = 0;
  for (uint64_t w : w_) n += std::popcount(w);
  return n;
}

bool BitVector::dot(const BitVector& o) const {
  if (o.len_ != len_) throw ValidationError("BitVector length mismatch");
  uint64_t acc = 0;
  for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
  return std::popcount(acc) & 1;
}

uint64_t BitVector::to_index() const {
  if (len_ > 64) throw ValidationError("BitVector too wide for an index");
  uint64_t v = 0;
  for (size_t i = 0; i < len_; ++i) v = (v << 1) | uint64_t(get(i));
  return v;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool BitVector::operator<(const BitVector& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  for (size_t i = 0; i < len_; ++i) {
    bool a = get(i), b = o.get(i);
    if (a != b) return !a;
  }
  return false;
}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
  if (rows.empty()) throw ValidationError("from_rows needs at least one row");
  BitMatrix m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ValidationError("ragged rows");
    for (size_t c = 0; c < m.cols_; ++c)
      if (rows[r].get(c)) m.set(r, c, true);
  }
  return m;
}

void BitMatrix::row_xor(size_t dst, size_t src) {
  uint64_t* d = &data_[dst * stride_];
  const uint64_t* s = &data_[src * stride_];
  for (size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

BitVector BitMatrix::row(size_t r) const {
  BitVector v(cols_);
  for (size_t c = 0; c < cols_; ++c)
    if (get(r, c)) v.set(c, true);
  return v;
}

size_t rank(const BitMatrix& m) {
  BitMatrix a = m;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t pivot = r;
    while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) a.row_xor(r, pivot);
    for (size_t i = 0; i < a.rows(); ++i)
      if (i != r && a.get(i, c)) a.row_xor(i, r);
    ++r;
  }
  return r;
}

BitMatrix invert(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("only square matrices invert");
  const size_t n = m.rows();
  BitMatrix a = m;
  BitMatrix inv = BitMatrix::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    while (pivot < n && !a.get(pivot, c)) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular over GF(2)");
    if (pivot != c) {
      a.row_xor(c, pivot);
      inv.row_xor(c, pivot);
    }
    for (size_t i = 0; i < n; ++i) {
      if (i != c && a.get(i, c)) {
        a.row_xor(i, c);
        inv.row_xor(i, c);
      }
    }
  }
  return inv;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
  if (m.cols() != v.size()) throw ValidationError("mat_vec dimension mismatch");
  BitVector out(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) out.set(r, m.row(r).dot(v));
  return out;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matmul dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t k = 0; k < a.cols(); ++k)
      if (a.get(r, k))
        for (size_t c = 0; c < b.cols(); ++c)
          if (b.get(k, c)) out.set(r, c, !out.get(r, c));
  return out;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix out(m.cols(), m.rows());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) out.set(c, r, true);
  return out;
}

bool is_invertible(const BitMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace qsprep
