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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qsprep/errors.hpp"

namespace qsprep {

/// Packed GF(2) vector. Bit 0 is the leftmost position of the written string
/// (the paper-style x_1), so "011" has bit 1 and bit 2 set.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t len) : len_(len), w_((len + 63) / 64, 0) {}

  /// Parse "0101..."; anything but '0'/'1' is an error.
  static BitVector from_string(std::string_view s);
  /// Expand an integer index; bit 0 of the vector is the most significant
  /// bit of the index, matching |x_1 x_2 ... x_n> basis labels.
  static BitVector from_index(uint64_t index, size_t len);

  size_t size() const { return len_; }
  bool get(size_t i) const {
    check(i);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(size_t i, bool v) {
    check(i);
    if (v)
      w_[i >> 6] |= uint64_t{1} << (i & 63);
    else
      w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void flip(size_t i) {
    check(i);
    w_[i >> 6] ^= uint64_t{1} << (i & 63);
  }

  void xor_with(const BitVector& o);
  bool any() const;
  size_t popcount() const;
  /// GF(2) inner product <this, o>.
  bool dot(const BitVector& o) const;

  uint64_t to_index() const;  // requires len <= 64
  std::string to_string() const;

  bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }
  bool operator<(const BitVector& o) const;  // lexicographic on the string form

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  void check(size_t i) const {
    if (i >= len_) throw ValidationError("BitVector index out of range");
  }
  size_t len_ = 0;
  std::vector<uint64_t> w_;
};

/// Dense row-major packed GF(2) matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

  static BitMatrix identity(size_t n);
  /// Rows taken from the given vectors (all of equal length).
  static BitMatrix from_rows(const std::vector<BitVector>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool get(size_t r, size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(size_t r, size_t c, bool v) {
    uint64_t& w = data_[r * stride_ + (c >> 6)];
    if (v)
      w |= uint64_t{1} << (c & 63);
    else
      w &= ~(uint64_t{1} << (c & 63));
  }
  /// row[dst] ^= row[src], word-parallel.
  void row_xor(size_t dst, size_t src);
  BitVector row(size_t r) const;

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<uint64_t> data_;
};

/// GF(2) row rank by Gaussian elimination.
size_t rank(const BitMatrix& m);

/// Inverse over GF(2); throws SingularMatrixError.
BitMatrix invert(const BitMatrix& m);

BitVector mat_vec(const BitMatrix& m, const BitVector& v);
BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& m);
bool is_invertible(const BitMatrix& m);

}  // namespace qsprep
