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

#include <random>

#include "qsprep/diag_synth.hpp"
#include "qsprep/sim.hpp"
#include "testutil.hpp"

using namespace qsprep;

namespace {

// Exhaustive phase-oracle check: bits identical (ancillas back to zero) and
// accumulated phase theta(x) within tol on every basis input.
void check_diag_phases(const Circuit& c, const PhaseVector& pv, uint32_t n,
                       double tol = 1e-9) {
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    BitVector in(c.num_qubits());
    for (uint32_t b = 0; b < n; ++b)
      if ((x >> (n - 1 - b)) & 1) in.set(b, true);
    const PhaseTrack t = run_phase_tracker(c, in);
    REQUIRE(t.bits == in);
    CHECK(std::abs(wrap_angle(t.phase - pv.theta[x])) <= tol);
  }
}

}  // namespace

TEST_CASE("ancilla synthesis reproduces the warm-up step structure") {
  std::mt19937_64 rng(83);
  const PhaseVector pv = test::random_thetas(rng, 4);
  const AlphaVector alpha = alphas_from_thetas(pv);
  DiagOptions opts;
  opts.force_emission = true;
  const Circuit c = synth_diag_ancilla(alpha, 4, 8, opts);
  CHECK(c.num_qubits() == 12);
  const DepthReport r = depth(c);
  REQUIRE(r.per_stage.size() == 16);
  for (int step = 0; step < 15; ++step) CHECK(r.per_stage[step].depth == 1);
  CHECK(r.per_stage[15].depth == 11);
  CHECK(r.staged_depth == 26);
  CHECK(r.depth <= 26);
  check_diag_phases(c, pv, 4);
}

TEST_CASE("ancilla synthesis with zero angles leaves no phase behind") {
  AlphaVector alpha;
  alpha.n = 4;
  alpha.alpha.assign(16, 0.0);
  const Circuit c = synth_diag_ancilla(alpha, 4, 8);
  PhaseVector zero;
  zero.n = 4;
  zero.theta.assign(16, 0.0);
  check_diag_phases(c, zero, 4, 1e-12);
}

TEST_CASE("ancilla synthesis n=6 m=16 meets the size ceiling") {
  std::mt19937_64 rng(89);
  const PhaseVector pv = test::random_thetas(rng, 6);
  const AlphaVector alpha = alphas_from_thetas(pv);
  const Circuit c = synth_diag_ancilla(alpha, 6, 16);
  check_diag_phases(c, pv, 6);
  CHECK(c.size() <= 3 * 64 + 6 * 16 + 3.5 * 16);
}

TEST_CASE("ancilla regime errors and clamping") {
  AlphaVector alpha;
  alpha.n = 4;
  alpha.alpha.assign(16, 0.0);
  CHECK_THROWS_AS(synth_diag_ancilla(alpha, 4, 7), RegimeError);
  // Budgets above the useful cap are clamped, leftover ancillas untouched.
  CHECK(plan_diag_ancilla(4, 100).m_used == 8);
  CHECK(plan_diag_ancilla(8, 100).m_used == 32);  // 2^8/8
  CHECK(plan_diag_ancilla(8, 21).m_used == 20);
}

TEST_CASE("no-ancilla base cases") {
  AlphaVector a1;
  a1.n = 1;
  a1.alpha = {0.0, 0.9};
  const Circuit c1 = synth_diag_no_ancilla(a1, 1);
  REQUIRE(c1.size() == 1);
  CHECK(c1.gates()[0].kind == GateKind::Phase);

  std::mt19937_64 rng(97);
  const PhaseVector pv = test::random_thetas(rng, 2);
  const Circuit c2 = synth_diag_no_ancilla(alphas_from_thetas(pv), 2);
  check_diag_phases(c2, pv, 2);
}

TEST_CASE("no-ancilla synthesis exact for n up to 10") {
  std::mt19937_64 rng(101);
  for (uint32_t n : {3u, 5u, 8u, 10u}) {
    const PhaseVector pv = test::random_thetas(rng, n);
    const Circuit c = synth_diag_no_ancilla(alphas_from_thetas(pv), n);
    check_diag_phases(c, pv, n);
    if (n == 10) CHECK(c.size() <= (size_t{1} << 13) + 3000);
  }
}

TEST_CASE("no-ancilla size stays inside the recursion envelope") {
  std::mt19937_64 rng(103);
  for (uint32_t n : {6u, 8u, 10u}) {
    const PhaseVector pv = test::random_thetas(rng, n);
    const AlphaVector alpha = alphas_from_thetas(pv);
    const Circuit c = synth_diag_no_ancilla(alpha, n);
    const uint32_t r_c = n - n / 2;
    AlphaVector sub;
    sub.n = r_c;
    sub.alpha.resize(size_t{1} << r_c);
    for (uint64_t p = 0; p < (uint64_t{1} << r_c); ++p)
      sub.alpha[p] = alpha.alpha[p << (n / 2)];
    const Circuit rec = synth_diag_no_ancilla(sub, r_c);
    CHECK(c.size() <= rec.size() + (size_t{1} << (n + 3)));
  }
}

TEST_CASE("G_1 moves the target register to T x and rotates first appearances") {
  const SuffixCover cover = independent_cover(2);
  const FkFamily fk = fk_families(cover, 2);
  std::mt19937_64 rng(107);
  const PhaseVector pv = test::random_thetas(rng, 4);
  const AlphaVector alpha = alphas_from_thetas(pv);
  DiagOptions opts;
  opts.force_emission = true;
  const Circuit g1 = build_Gk(1, cover, fk, alpha, opts);
  const BitMatrix t1 = BitMatrix::from_rows(cover.sets[0]);
  for (uint64_t x = 0; x < 16; ++x) {
    const BitVector in = BitVector::from_index(x, 4);
    const PhaseTrack t = run_phase_tracker(g1, in);
    // Control register untouched, target register transited to T^(1) x_t.
    BitVector xt(2);
    xt.set(0, in.get(2));
    xt.set(1, in.get(3));
    const BitVector yt = mat_vec(t1, xt);
    CHECK(t.bits.get(0) == in.get(0));
    CHECK(t.bits.get(1) == in.get(1));
    CHECK(t.bits.get(2) == yt.get(0));
    CHECK(t.bits.get(3) == yt.get(1));
  }
  // Every first-appearance suffix row carries 2^{r_c} rotations when forced.
  size_t rotations = 0;
  for (const Gate& g : g1.gates()) rotations += g.kind == GateKind::Phase;
  size_t first = 0;
  for (const BitVector& t : cover.sets[0]) first += fk.member(t.to_index(), 1);
  CHECK(rotations == first * 4);
  CHECK_THROWS_AS(build_Gk(cover.ell() + 1, cover, fk, alpha), ValidationError);
}

TEST_CASE("later stages skip suffixes that already appeared") {
  const SuffixCover cover = independent_cover(3);
  const FkFamily fk = fk_families(cover, 3);
  AlphaVector alpha;
  alpha.n = 6;
  alpha.alpha.assign(64, 0.0);
  DiagOptions opts;
  opts.force_emission = true;
  for (int k = 2; k <= cover.ell(); ++k) {
    const Circuit gk = build_Gk(k, cover, fk, alpha, opts);
    size_t rotations = 0;
    for (const Gate& g : gk.gates()) rotations += g.kind == GateKind::Phase;
    size_t first = 0;
    for (const BitVector& t : cover.sets[k - 1])
      first += fk.member(t.to_index(), k);
    CHECK(rotations == first * 8);
  }
}

TEST_CASE("reset undoes the generate chain") {
  const SuffixCover cover = independent_cover(3);
  const FkFamily fk = fk_families(cover, 3);
  AlphaVector alpha;
  alpha.n = 6;
  alpha.alpha.assign(64, 0.0);
  Circuit chain(6);
  for (int k = 1; k <= cover.ell(); ++k) chain.append(build_Gk(k, cover, fk, alpha));
  {
    const Circuit reset = build_reset(cover);
    std::vector<uint32_t> map{3, 4, 5};
    chain.append_mapped(reset, map);
  }
  for (uint64_t x = 0; x < 64; ++x) {
    const BitVector in = BitVector::from_index(x, 6);
    CHECK(run_phase_tracker(chain, in).bits == in);
  }
  // R as a GF(2) map equals the inverse of the last stage matrix.
  const Circuit reset = build_reset(cover);
  const BitMatrix want = invert(BitMatrix::from_rows(cover.sets.back()));
  for (uint64_t y = 0; y < 8; ++y) {
    const BitVector in = BitVector::from_index(y, 3);
    CHECK(run_phase_tracker(reset, in).bits == mat_vec(want, in));
  }
}

TEST_CASE("reset of an identity-matrix cover is empty") {
  SuffixCover cover;
  cover.r_t = 2;
  cover.sets = {{BitVector::from_string("10"), BitVector::from_string("01")}};
  CHECK(build_reset(cover).size() == 0);
}

TEST_CASE("inverse stage is the reversed CNOT log of stages 1-4") {
  std::mt19937_64 rng(109);
  const PhaseVector pv = test::random_thetas(rng, 5);
  const Circuit c = synth_diag_ancilla(alphas_from_thetas(pv), 5, 10);
  const DepthReport r = depth(c);
  REQUIRE(!r.per_stage.empty());
  // Gather the gate index range of the last stage.
  const std::string last = r.per_stage.back().label;
  std::vector<Gate> head_cnots, tail;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c.stage_label(i) == last)
      tail.push_back(c.gates()[i]);
    else if (c.gates()[i].kind == GateKind::CNOT)
      head_cnots.push_back(c.gates()[i]);
  }
  REQUIRE(tail.size() == head_cnots.size());
  for (size_t i = 0; i < tail.size(); ++i) {
    CHECK(tail[i] == head_cnots[head_cnots.size() - 1 - i]);
    CHECK(tail[i].kind == GateKind::CNOT);
  }
}

TEST_CASE("depth is monotone non-increasing over a doubling budget grid") {
  std::mt19937_64 rng(113);
  const PhaseVector pv = test::random_thetas(rng, 10);
  const AlphaVector alpha = alphas_from_thetas(pv);
  uint32_t prev = UINT32_MAX;
  for (uint64_t m : {20u, 40u, 80u}) {
    const uint32_t d = depth(synth_diag_ancilla(alpha, 10, m)).depth;
    CHECK(d <= prev);
    prev = d;
  }
}
