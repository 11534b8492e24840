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

#include <doctest.h>

#include <bit>
#include <random>

#include "qsprep/angles.hpp"
#include "testutil.hpp"

using namespace qsprep;

namespace {

Mat2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Cx a{g(rng), g(rng)}, b{g(rng), g(rng)};
  const double n0 = std::sqrt(std::norm(a) + std::norm(b));
  a /= n0;
  b /= n0;
  // Second column orthogonal to (a, b), with a random relative phase.
  const Cx phase = std::polar(1.0, g(rng));
  return {a, -std::conj(b) * phase, b, std::conj(a) * phase};
}

// Independent evaluation of the tree as a product of first-column entries.
Cx tree_leaf_amplitude(const AmplitudeTree& tree, uint64_t x) {
  Cx amp{1, 0};
  uint64_t prefix = 0;
  for (uint32_t j = 1; j <= tree.n; ++j) {
    const uint32_t bit = (x >> (tree.n - j)) & 1;
    const Mat2& u = tree.levels[j - 1][prefix];
    amp *= u[bit ? 2 : 0];  // column 0, row = bit
    prefix = (prefix << 1) | bit;
  }
  return amp;
}

// Dense application of diag(A1 (x) I) A2 (I (x) SH) A4 (I (x) HS+) A6 times
// the accumulated global phase, on a basis column.
std::vector<Cx> apply_factors(const UcgDiagonals& d, uint32_t n, uint64_t col) {
  std::vector<Cx> v(size_t{1} << n, Cx{0, 0});
  v[col] = 1;
  auto diag = [&](const PhaseVector& pv, bool on_controls) {
    if (pv.n == 0) return;
    for (size_t i = 0; i < v.size(); ++i) {
      const size_t idx = on_controls ? i >> 1 : i;
      v[i] *= std::polar(1.0, pv.theta[idx]);
    }
  };
  auto last_qubit = [&](const Mat2& u) {
    for (size_t i = 0; i < v.size(); i += 2) {
      const Cx a = v[i], b = v[i + 1];
      v[i] = u[0] * a + u[1] * b;
      v[i + 1] = u[2] * a + u[3] * b;
    }
  };
  const Cx inv_sqrt2{1 / std::sqrt(2.0), 0};
  const Mat2 h{inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
  const Mat2 s{Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{0, 1}};
  const Mat2 sdg{Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{0, -1}};
  diag(d.a6, false);
  last_qubit(mat2_mul(h, sdg));  // A5 = I (x) HS+
  diag(d.a4, false);
  last_qubit(mat2_mul(s, h));  // A3 = I (x) SH
  diag(d.a2, false);
  diag(d.a1, true);
  for (Cx& a : v) a *= std::polar(1.0, d.global_phase);
  return v;
}

}  // namespace

TEST_CASE("amplitude tree of a basis state is all identities") {
  std::vector<Cx> v(8, Cx{0, 0});
  v[0] = 1;
  const AmplitudeTree tree = amplitude_tree(v);
  for (const auto& level : tree.levels)
    for (const Mat2& u : level) {
      CHECK(std::abs(u[0] - Cx{1, 0}) < 1e-12);
      CHECK(std::abs(u[2]) < 1e-12);
    }
}

TEST_CASE("amplitude tree matches the worked 3-qubit example") {
  const std::vector<Cx> nu{std::sqrt(0.03), std::sqrt(0.07), std::sqrt(0.15),
                           std::sqrt(0.05), std::sqrt(0.1),  std::sqrt(0.3),
                           std::sqrt(0.2),  std::sqrt(0.1)};
  const AmplitudeTree tree = amplitude_tree(nu);
  // Root node is Ry(2 theta0) with theta0 = arccos(sqrt(0.3)).
  const double theta0 = std::acos(std::sqrt(0.3));
  CHECK(std::real(tree.levels[0][0][0]) == doctest::Approx(std::cos(theta0)));
  CHECK(std::real(tree.levels[0][0][2]) == doctest::Approx(std::sin(theta0)));
  // Leaf node of prefix 00 is Ry(2 theta3), theta3 = arccos(sqrt(0.03/0.1)).
  const double theta3 = std::acos(std::sqrt(0.03 / 0.1));
  CHECK(std::real(tree.levels[2][0][0]) == doctest::Approx(std::cos(theta3)));
  CHECK(std::real(tree.levels[2][0][2]) == doctest::Approx(std::sin(theta3)));
  for (uint64_t x = 0; x < 8; ++x)
    CHECK(std::abs(tree_leaf_amplitude(tree, x) - nu[x]) < 1e-12);
}

TEST_CASE("amplitude tree reconstructs random complex states") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<Cx> v = test::random_state(rng, 5);
    const AmplitudeTree tree = amplitude_tree(v);
    for (const auto& level : tree.levels)
      for (const Mat2& u : level) CHECK(is_unitary(u));
    for (uint64_t x = 0; x < 32; ++x)
      CHECK(std::abs(tree_leaf_amplitude(tree, x) - v[x]) < 1e-9);
  }
  std::vector<Cx> bad(4, Cx{1, 0});
  CHECK_THROWS_AS(amplitude_tree(bad), ValidationError);
}

TEST_CASE("zyz of identity and Rz") {
  const Mat2 id{Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{1, 0}};
  const ZYZ zi = zyz(id);
  CHECK(zi.alpha == doctest::Approx(0.0));
  CHECK(zi.beta == doctest::Approx(0.0));
  CHECK(zi.gamma == doctest::Approx(0.0));
  CHECK(zi.delta == doctest::Approx(0.0));

  const double beta = 1.234;
  const Mat2 rz{std::polar(1.0, -beta / 2), Cx{0, 0}, Cx{0, 0},
                std::polar(1.0, beta / 2)};
  const ZYZ zr = zyz(rz);
  CHECK(zr.alpha == doctest::Approx(0.0));
  CHECK(zr.gamma == doctest::Approx(0.0));
  CHECK(zr.beta + zr.delta == doctest::Approx(beta));
  CHECK(mat2_dist(zyz_reconstruct(zr), rz) < 1e-12);
}

TEST_CASE("zyz reconstructs 1000 random unitaries") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 1000; ++trial) {
    const Mat2 u = random_unitary(rng);
    const ZYZ d = zyz(u);
    CHECK(mat2_dist(zyz_reconstruct(d), u) < 1e-10);
    CHECK(std::abs(d.beta) <= 2 * 3.14159265358979 + 1e-9);
  }
  const Mat2 not_unitary{Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{2, 0}};
  CHECK_THROWS_AS(zyz(not_unitary), ValidationError);
}

TEST_CASE("ucg diagonals of identities vanish") {
  const Mat2 id{Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{1, 0}};
  const UcgDiagonals d = ucg_to_diagonals({id, id, id, id});
  for (const PhaseVector* pv : {&d.a1, &d.a2, &d.a4, &d.a6})
    for (double t : pv->theta) CHECK(t == doctest::Approx(0.0));
  CHECK(d.global_phase == doctest::Approx(0.0));
}

TEST_CASE("ucg factorization reproduces the block diagonal") {
  std::mt19937_64 rng(71);
  for (uint32_t n : {1u, 2u, 3u}) {
    std::vector<Mat2> level(size_t{1} << (n - 1));
    for (Mat2& u : level) u = random_unitary(rng);
    const UcgDiagonals d = ucg_to_diagonals(level);
    for (uint64_t col = 0; col < (uint64_t{1} << n); ++col) {
      const std::vector<Cx> got = apply_factors(d, n, col);
      //块 diagonal: column col only mixes within its 2x2 block.
      const size_t block = col >> 1;
      const Mat2& u = level[block];
      for (uint64_t row = 0; row < (uint64_t{1} << n); ++row) {
        Cx want{0, 0};
        if (row >> 1 == block) want = u[(row & 1) ? ((col & 1) ? 3 : 2)
                                                  : ((col & 1) ? 1 : 0)];
        CHECK(std::abs(got[row] - want) < 1e-10);
      }
    }
  }
}

TEST_CASE("alpha solve n=1 and the 3x3 golden") {
  PhaseVector t1;
  t1.n = 1;
  t1.theta = {0.0, 0.77};
  CHECK(alphas_from_thetas(t1).alpha[1] == doctest::Approx(0.77));

  PhaseVector t2;
  t2.n = 2;
  t2.theta = {0.0, 0.3, -0.6, 1.1};  // theta_01, theta_10, theta_11
  const AlphaVector a = alphas_from_thetas(t2);
  CHECK(a.alpha[0b01] == doctest::Approx((0.3 + 0.6 + 1.1) / 2));
  CHECK(a.alpha[0b10] == doctest::Approx((-0.3 - 0.6 + 1.1) / 2));
  CHECK(a.alpha[0b11] == doctest::Approx((0.3 - 0.6 - 1.1) / 2));
}

TEST_CASE("alpha solve satisfies the linear system brute force") {
  std::mt19937_64 rng(73);
  const PhaseVector pv = test::random_thetas(rng, 8);
  const AlphaVector a = alphas_from_thetas(pv);
  CHECK(a.alpha[0] == 0.0);
  for (uint64_t x = 1; x < 256; ++x) {
    double sum = 0;
    for (uint64_t s = 1; s < 256; ++s)
      if (std::popcount(x & s) & 1) sum += a.alpha[s];
    CHECK(std::abs(wrap_angle(sum - pv.theta[x])) < 1e-9);
  }
}

TEST_CASE("alpha solve is linear and round trips") {
  std::mt19937_64 rng(79);
  PhaseVector p1 = test::random_thetas(rng, 6);
  PhaseVector p2 = test::random_thetas(rng, 6);
  PhaseVector sum;
  sum.n = 6;
  sum.theta.resize(64);
  for (size_t i = 0; i < 64; ++i) sum.theta[i] = p1.theta[i] + p2.theta[i];
  const AlphaVector a1 = alphas_from_thetas(p1);
  const AlphaVector a2 = alphas_from_thetas(p2);
  const AlphaVector as = alphas_from_thetas(sum);
  for (size_t s = 0; s < 64; ++s)
    CHECK(std::abs(wrap_angle(as.alpha[s] - a1.alpha[s] - a2.alpha[s])) < 1e-9);

  const PhaseVector back = thetas_from_alphas(a1);
  for (size_t x = 0; x < 64; ++x)
    CHECK(std::abs(wrap_angle(back.theta[x] - p1.theta[x])) < 1e-9);
}
