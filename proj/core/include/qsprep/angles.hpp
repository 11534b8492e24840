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

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qsprep/errors.hpp"

namespace qsprep {

using Cx = std::complex<double>;
/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Cx, 4>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
double mat2_dist(const Mat2& a, const Mat2& b);
bool is_unitary(const Mat2& u, double tol = 1e-10);

/// Per-level 2x2 unitaries of the uniformly controlled decomposition: level
/// j (1-based) holds 2^{j-1} node unitaries, node i belonging to control
/// prefix i. Node U maps |0> to the normalized (left child, right child)
/// pair of the subtree-norm tree; the free column is completed as
/// e^{i a} Rz(b) Ry(g), so interior nodes of nonnegative trees come out as
/// plain Ry rotations and their diagonal corrections vanish.
struct AmplitudeTree {
  uint32_t n = 0;
  std::vector<std::vector<Mat2>> levels;  // levels[j-1].size() == 2^{j-1}
};

AmplitudeTree amplitude_tree(const std::vector<Cx>& v);

/// Angles of U = e^{i alpha} Rz(beta) (SH) Rz(gamma) (HS+) Rz(delta); the
/// middle factor equals Ry(gamma).
struct ZYZ {
  double alpha = 0, beta = 0, gamma = 0, delta = 0;
};

ZYZ zyz(const Mat2& u);
Mat2 zyz_reconstruct(const ZYZ& a);

/// Diagonal of a width-n phase operator diag(e^{i theta_x}); theta[0] = 0.
struct PhaseVector {
  uint32_t n = 0;
  std::vector<double> theta;  // size 2^n
};

struct AlphaVector {
  uint32_t n = 0;
  std::vector<double> alpha;  // size 2^n, alpha[0] = 0
};

/// The three Rz diagonals and the control-register phase diagonal of a UCG,
/// each canonicalized to theta[0] = 0 with the residue folded into
/// global_phase. a1 has width n-1 (it acts on the controls only); the fixed
/// SH / HS+ layers are not represented here.
struct UcgDiagonals {
  PhaseVector a1, a2, a4, a6;
  double global_phase = 0;
};

UcgDiagonals ucg_to_diagonals(const std::vector<Mat2>& level);

/// Solve sum_s alpha_s <x,s> = theta(x) (mod 2pi) for all x != 0 with
/// alpha_0 = 0, via one fast Walsh-Hadamard transform (O(n 2^n)). Results
/// are reduced into (-pi, pi].
AlphaVector alphas_from_thetas(const PhaseVector& theta);

/// Forward evaluation theta(x) = sum_s alpha_s <x,s>, also via one FWHT.
PhaseVector thetas_from_alphas(const AlphaVector& alpha);

/// In-place Walsh-Hadamard transform of a length-2^k array.
void fwht(std::vector<double>& a);

/// Reduce an angle into (-pi, pi].
double wrap_angle(double a);

}  // namespace qsprep
