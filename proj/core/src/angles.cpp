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

#include "qsprep/angles.hpp"

#include <cmath>
#include <numbers>

namespace qsprep {

double wrap_angle(double a) {
  constexpr double kPi = std::numbers::pi;
  a = std::fmod(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  if (a > kPi) a -= 2 * kPi;
  return a;
}

namespace {

bool is_pow2(size_t x) { return x && (x & (x - 1)) == 0; }

uint32_t log2_exact(size_t x) {
  uint32_t n = 0;
  while ((size_t{1} << n) < x) ++n;
  return n;
}

}  // namespace

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

double mat2_dist(const Mat2& a, const Mat2& b) {
  double d = 0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool is_unitary(const Mat2& u, double tol) {
  const Mat2 udag{std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
  const Mat2 p = mat2_mul(udag, u);
  const Mat2 id{Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{1, 0}};
  return mat2_dist(p, id) <= tol;
}

namespace {

// U = e^{i a} Rz(b) Ry(g) whose first column is the given unit pair; the
// second column is the canonical unitary completion with delta = 0.
Mat2 node_from_column(Cx top, Cx bot) {
  const double mt = std::abs(top), mb = std::abs(bot);
  const double g = 2.0 * std::atan2(mb, mt);
  double arg_t = mt > 0 ? std::arg(top) : 0.0;
  double arg_b = mb > 0 ? std::arg(bot) : 0.0;
  if (mt == 0) arg_t = arg_b;
  if (mb == 0) arg_b = arg_t;
  const double b = arg_b - arg_t;
  const double a = 0.5 * (arg_t + arg_b);
  const Cx ephase = std::polar(1.0, a);
  const double ch = std::cos(g / 2), sh = std::sin(g / 2);
  return {ephase * std::polar(ch, -b / 2), ephase * std::polar(-sh, -b / 2),
          ephase * std::polar(sh, b / 2), ephase * std::polar(ch, b / 2)};
}

}  // namespace

AmplitudeTree amplitude_tree(const std::vector<Cx>& v) {
  if (!is_pow2(v.size())) throw ValidationError("state length must be a power of 2");
  const uint32_t n = log2_exact(v.size());
  double norm2 = 0;
  for (const Cx& a : v) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
    throw ValidationError("state vector must have unit l2 norm");

  AmplitudeTree tree;
  tree.n = n;
  if (n == 0) return tree;
  // weights[j] holds the subtree norms at depth j (2^j prefixes); the leaf
  // values keep their phases, everything above is a nonnegative norm.
  std::vector<std::vector<Cx>> weights(n + 1);
  weights[n].assign(v.begin(), v.end());
  for (uint32_t j = n; j-- > 0;) {
    weights[j].resize(size_t{1} << j);
    for (size_t p = 0; p < weights[j].size(); ++p) {
      const Cx l = weights[j + 1][2 * p], r = weights[j + 1][2 * p + 1];
      weights[j][p] = std::sqrt(std::norm(l) + std::norm(r));
    }
  }
  tree.levels.resize(n);
  for (uint32_t j = 1; j <= n; ++j) {
    auto& level = tree.levels[j - 1];
    level.resize(size_t{1} << (j - 1));
    for (size_t p = 0; p < level.size(); ++p) {
      const Cx parent = weights[j - 1][p];
      const Cx l = weights[j][2 * p], r = weights[j][2 * p + 1];
      if (std::abs(parent) < 1e-300) {
        level[p] = {Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{1, 0}};  // dead subtree
      } else {
        level[p] = node_from_column(l / parent, r / parent);
      }
    }
  }
  return tree;
}

ZYZ zyz(const Mat2& u) {
  if (!is_unitary(u)) throw ValidationError("zyz: input is not unitary");
  ZYZ out;
  const Cx det = u[0] * u[3] - u[1] * u[2];
  out.alpha = 0.5 * std::arg(det);
  const Cx inv_phase = std::polar(1.0, -out.alpha);
  const Cx a = u[0] * inv_phase;  // e^{-i(b+d)/2} cos(g/2)
  const Cx c = u[2] * inv_phase;  // e^{+i(b-d)/2} sin(g/2)
  out.gamma = 2.0 * std::atan2(std::abs(c), std::abs(a));
  double sum = 0, diff = 0;  // b+d and b-d
  if (std::abs(a) > 1e-12) sum = -2.0 * std::arg(a);
  if (std::abs(c) > 1e-12) diff = 2.0 * std::arg(c);
  if (std::abs(a) <= 1e-12) sum = diff;   // gamma = pi: only b-d matters
  if (std::abs(c) <= 1e-12) diff = sum;   // gamma = 0: only b+d matters
  out.beta = 0.5 * (sum + diff);
  out.delta = 0.5 * (sum - diff);
  return out;
}

Mat2 zyz_reconstruct(const ZYZ& a) {
  const double ch = std::cos(a.gamma / 2), sh = std::sin(a.gamma / 2);
  const Mat2 ry{Cx{ch, 0}, Cx{-sh, 0}, Cx{sh, 0}, Cx{ch, 0}};
  const Mat2 rzb{std::polar(1.0, -a.beta / 2), Cx{0, 0}, Cx{0, 0},
                 std::polar(1.0, a.beta / 2)};
  const Mat2 rzd{std::polar(1.0, -a.delta / 2), Cx{0, 0}, Cx{0, 0},
                 std::polar(1.0, a.delta / 2)};
  Mat2 m = mat2_mul(rzb, mat2_mul(ry, rzd));
  const Cx g = std::polar(1.0, a.alpha);
  for (Cx& e : m) e *= g;
  return m;
}

UcgDiagonals ucg_to_diagonals(const std::vector<Mat2>& level) {
  if (!is_pow2(level.size()))
    throw ValidationError("UCG level must hold 2^{j-1} unitaries");
  const uint32_t nc = log2_exact(level.size());  // control width = n-1
  UcgDiagonals out;
  out.a1.n = nc;
  out.a1.theta.assign(size_t{1} << nc, 0.0);
  out.a2.n = out.a4.n = out.a6.n = nc + 1;
  out.a2.theta.assign(size_t{2} << nc, 0.0);
  out.a4.theta.assign(size_t{2} << nc, 0.0);
  out.a6.theta.assign(size_t{2} << nc, 0.0);

  for (size_t kidx = 0; kidx < level.size(); ++kidx) {
    const ZYZ d = zyz(level[kidx]);
    out.a1.theta[kidx] = d.alpha;
    // Rz(t) = diag(e^{-it/2}, e^{it/2}): the target bit selects the sign.
    out.a2.theta[2 * kidx] = -d.beta / 2;
    out.a2.theta[2 * kidx + 1] = d.beta / 2;
    out.a4.theta[2 * kidx] = -d.gamma / 2;
    out.a4.theta[2 * kidx + 1] = d.gamma / 2;
    out.a6.theta[2 * kidx] = -d.delta / 2;
    out.a6.theta[2 * kidx + 1] = d.delta / 2;
  }
  for (PhaseVector* pv : {&out.a1, &out.a2, &out.a4, &out.a6}) {
    const double base = pv->theta[0];
    if (base != 0.0) {
      out.global_phase += base;
      for (double& t : pv->theta) t -= base;
    }
  }
  return out;
}

void fwht(std::vector<double>& a) {
  if (!is_pow2(a.size())) throw ValidationError("fwht needs a power-of-2 length");
  for (size_t half = 1; half < a.size(); half <<= 1) {
    for (size_t base = 0; base < a.size(); base += 2 * half) {
      for (size_t i = base; i < base + half; ++i) {
        const double x = a[i], y = a[i + half];
        a[i] = x + y;
        a[i + half] = x - y;
      }
    }
  }
}

AlphaVector alphas_from_thetas(const PhaseVector& theta) {
  if (!is_pow2(theta.theta.size()) || theta.theta.size() != (size_t{1} << theta.n))
    throw ValidationError("phase vector size mismatch");
  if (theta.theta[0] != 0.0)
    throw ValidationError("phase vector must be canonical (theta[0] = 0)");
  AlphaVector out;
  out.n = theta.n;
  out.alpha = theta.theta;
  fwht(out.alpha);
  // With theta_0 = 0 the (2A - J) inverse reduces to -W theta / 2^{n-1}.
  const double scale = -std::ldexp(1.0, 1 - int(theta.n));
  out.alpha[0] = 0.0;
  for (size_t s = 1; s < out.alpha.size(); ++s)
    out.alpha[s] = wrap_angle(scale * out.alpha[s]);
  return out;
}

PhaseVector thetas_from_alphas(const AlphaVector& alpha) {
  if (!is_pow2(alpha.alpha.size()) || alpha.alpha.size() != (size_t{1} << alpha.n))
    throw ValidationError("alpha vector size mismatch");
  PhaseVector out;
  out.n = alpha.n;
  std::vector<double> w = alpha.alpha;
  double total = 0;
  for (double v : w) total += v;
  fwht(w);
  // theta(x) = (sum_s alpha_s - (W alpha)_x) / 2.
  out.theta.resize(w.size());
  for (size_t x = 0; x < w.size(); ++x) out.theta[x] = 0.5 * (total - w[x]);
  return out;
}

}  // namespace qsprep
