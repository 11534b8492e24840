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

// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Every tolerance is pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qsprep/bench.hpp"
#include "qsprep/bounds.hpp"
#include "qsprep/diag_synth.hpp"
#include "qsprep/graycode.hpp"
#include "qsprep/prepare.hpp"
#include "qsprep/sim.hpp"
#include "qsprep/sparse_prep.hpp"

using namespace qsprep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Cx> random_state(std::mt19937_64& rng, uint32_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Cx> v(size_t{1} << n);
  double n2 = 0;
  for (Cx& a : v) {
    a = Cx{g(rng), g(rng)};
    n2 += std::norm(a);
  }
  for (Cx& a : v) a /= std::sqrt(n2);
  return v;
}

PhaseVector random_thetas(std::mt19937_64& rng, uint32_t n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  PhaseVector pv;
  pv.n = n;
  pv.theta.assign(size_t{1} << n, 0.0);
  for (size_t i = 1; i < pv.theta.size(); ++i) pv.theta[i] = u(rng);
  return pv;
}

// Exhaustive per-basis phase check of a diagonal circuit.
bool diag_ok(const Circuit& c, const PhaseVector& pv, uint32_t n, double tol,
             double* max_err = nullptr) {
  double worst = 0;
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    BitVector in(c.num_qubits());
    for (uint32_t b = 0; b < n; ++b)
      if ((x >> (n - 1 - b)) & 1) in.set(b, true);
    const PhaseTrack t = run_phase_tracker(c, in);
    if (!(t.bits == in)) return false;
    worst = std::max(worst, std::abs(wrap_angle(t.phase - pv.theta[x])));
  }
  if (max_err) *max_err = worst;
  return worst <= tol;
}

struct QspCheck {
  double fidelity = 0;
  double ancilla_mass = 0;
  bool support_ok = true;
};

QspCheck qsp_check(const Circuit& c, const std::vector<Cx>& v, uint32_t n) {
  QspCheck r;
  RunOptions opts;
  opts.support_cap = size_t{2} << n;  // 2^{n+1}
  SparseState out(c.num_qubits());
  try {
    out = run_sparse(c, SparseState::zero(c.num_qubits()), opts);
  } catch (const SimulationError&) {
    r.support_ok = false;
    return r;
  }
  Cx ip{0, 0};
  for (const auto& [k, amp] : out.amplitudes()) {
    uint64_t x = 0;
    bool anc_zero = true;
    for (uint32_t q = 0; q < c.num_qubits(); ++q) {
      if (q < n)
        x = (x << 1) | uint64_t(k.get(q));
      else if (k.get(q))
        anc_zero = false;
    }
    if (anc_zero)
      ip += std::conj(v[x]) * amp;
    else
      r.ancilla_mass += std::norm(amp);
  }
  r.fidelity = std::abs(ip);
  return r;
}

int g_failures = 0;

void report(int crit, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", crit,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

// ---------------------------------------------------------------------------

// 1. Warm-up golden: Lambda_4 with 8 ancillas under forced emission has the
//    16-step structure (steps 1-15 depth 1, step 16 depth 11, staged total
//    26) and its per-basis phases match the solved alpha assignment.
void criterion_1() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2026);
  const PhaseVector pv = random_thetas(rng, 4);
  const AlphaVector alpha = alphas_from_thetas(pv);
  DiagOptions opts;
  opts.force_emission = true;
  const Circuit c = synth_diag_ancilla(alpha, 4, 8, opts);
  const DepthReport r = depth(c);
  bool ok = r.per_stage.size() == 16;
  for (int s = 0; ok && s < 15; ++s) ok = r.per_stage[s].depth == 1;
  ok = ok && r.per_stage[15].depth == 11 && r.staged_depth == 26;
  double max_err = 0;
  ok = ok && diag_ok(c, pv, 4, 1e-12, &max_err);
  const double secs = seconds_since(t0);
  ok = ok && secs < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "warm-up golden: 16 steps, staged depth %u (want 26), "
                "max phase err %.1e, %.2fs",
                depth(c).staged_depth, max_err, secs);
  report(1, ok, buf);
}

// 2. Diagonal phase oracle: every basis input gives bit identity, clean
//    ancillas and phase error <= 1e-9; 20 random thetas per instance.
bool g_crit2_ok = true;
std::vector<std::pair<uint32_t, uint64_t>> g_suite2;  // (n, m) ancilla cases

void criterion_2() {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst = 0;
  for (uint32_t n = 1; n <= 10 && ok; ++n) {
    std::mt19937_64 rng(100 + n);
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const PhaseVector pv = random_thetas(rng, n);
      const Circuit c = synth_diag_no_ancilla(alphas_from_thetas(pv), n);
      double err = 0;
      ok = diag_ok(c, pv, n, 1e-9, &err);
      worst = std::max(worst, err);
    }
  }
  for (uint32_t n = 1; n <= 8 && ok; ++n) {
    std::set<uint64_t> ms;
    for (uint64_t m :
         {uint64_t{2} * n, uint64_t{4} * n, (uint64_t{1} << n) / n}) {
      if (m < 2 * uint64_t{n}) continue;  // outside the copy/phase regime
      ms.insert(m);
    }
    std::mt19937_64 rng(200 + n);
    for (uint64_t m : ms) {
      g_suite2.emplace_back(n, m);
      for (int trial = 0; trial < 20 && ok; ++trial) {
        const PhaseVector pv = random_thetas(rng, n);
        const Circuit c = synth_diag_ancilla(alphas_from_thetas(pv), n, m);
        double err = 0;
        ok = diag_ok(c, pv, n, 1e-9, &err);
        worst = std::max(worst, err);
      }
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 60.0;
  g_crit2_ok = ok;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "diagonal phase oracle (n<=10 plain, n<=8 ancilla): "
                "max err %.1e, %.1fs (budget 60s)",
                worst, secs);
  report(2, ok, buf);
}

// 3. QSP fidelity across regimes with the sparse-support cap asserted at
//    every gate.
void criterion_3() {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst_fid = 1.0, worst_mass = 0.0;
  for (uint32_t n = 2; n <= 8 && ok; ++n) {
    std::mt19937_64 rng(300 + n);
    for (uint64_t m :
         {uint64_t{0}, uint64_t{2} * n, uint64_t{3} * (uint64_t{1} << n)}) {
      for (int trial = 0; trial < 20 && ok; ++trial) {
        const std::vector<Cx> v = random_state(rng, n);
        SynthesisRequest req{v, m, Strategy::Auto};
        const PrepareResult res = prepare_state(req);
        const QspCheck chk = qsp_check(res.circuit, v, n);
        ok = chk.support_ok && chk.fidelity >= 1 - 1e-9 &&
             chk.ancilla_mass <= 1e-18;
        worst_fid = std::min(worst_fid, chk.fidelity);
        worst_mass = std::max(worst_mass, chk.ancilla_mass);
      }
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 120.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "qsp fidelity n=2..8, m in {0,2n,3*2^n}: min fid 1-%.1e, "
                "max ancilla mass %.1e, %.1fs (budget 120s)",
                1 - worst_fid, worst_mass, secs);
  report(3, ok, buf);
}

// 4. Size ceilings: the copy/phase diagonal stays under 3*2^n + n*m + 3.5*m
//    on every suite-2 instance; ancilla-free preparation fits C*2^n with one
//    C <= 16 across n = 4..10.
void criterion_4() {
  bool ok = true;
  double worst_ratio = 0;
  for (auto [n, m] : g_suite2) {
    std::mt19937_64 rng(400 + n);
    const PhaseVector pv = random_thetas(rng, n);
    const Circuit c = synth_diag_ancilla(alphas_from_thetas(pv), n, m);
    const uint32_t mu = plan_diag_ancilla(n, m).m_used;
    const double bound = 3.0 * std::ldexp(1.0, int(n)) + double(n) * mu + 3.5 * mu;
    ok = ok && double(c.size()) <= bound;
  }
  double fitted_c = 0;
  for (uint32_t n = 4; n <= 10; ++n) {
    std::mt19937_64 rng(410 + n);
    const std::vector<Cx> v = random_state(rng, n);
    SynthesisRequest req{v, 0, Strategy::Auto};
    const PrepareResult res = prepare_state(req);
    fitted_c = std::max(fitted_c,
                        double(res.report.size) / std::ldexp(1.0, int(n)));
  }
  worst_ratio = fitted_c;
  ok = ok && fitted_c <= 16.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "size ceilings: diag <= 3*2^n+nm+3.5m on all suite-2 "
                "instances, qsp fitted C = %.2f (<= 16)",
                worst_ratio);
  report(4, ok, buf);
}

// 5. Depth scaling of the n=12 diagonal: least-squares fit of
//    depth ~ a*2^n/m + b*log2 m with per-point relative residual <= 25%,
//    and depth monotone non-increasing in m.
void criterion_5() {
  const uint32_t n = 12;
  std::mt19937_64 rng(500);
  const PhaseVector pv = random_thetas(rng, n);
  const AlphaVector alpha = alphas_from_thetas(pv);
  const std::vector<uint64_t> ms{24, 48, 96, 192, 341};
  std::vector<double> d, f1, f2;
  bool monotone = true;
  double prev = 1e300;
  for (uint64_t m : ms) {
    const double dep = depth(synth_diag_ancilla(alpha, n, m)).depth;
    monotone = monotone && dep <= prev;
    prev = dep;
    d.push_back(dep);
    f1.push_back(std::ldexp(1.0, int(n)) / double(m));
    f2.push_back(std::log2(double(m)));
  }
  // 2x2 normal equations for d ~ a f1 + b f2.
  double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    s11 += f1[i] * f1[i];
    s12 += f1[i] * f2[i];
    s22 += f2[i] * f2[i];
    r1 += f1[i] * d[i];
    r2 += f2[i] * d[i];
  }
  const double det = s11 * s22 - s12 * s12;
  const double a = (r1 * s22 - r2 * s12) / det;
  const double b = (s11 * r2 - s12 * r1) / det;
  double worst = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    const double fit = a * f1[i] + b * f2[i];
    worst = std::max(worst, std::abs(fit - d[i]) / d[i]);
  }
  const bool ok = monotone && worst <= 0.25;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "depth(m) fit a*2^n/m + b*log m: a=%.2f b=%.2f, max relative "
                "residual %.1f%% (<= 25%%), monotone %s",
                a, b, 100 * worst, monotone ? "yes" : "no");
  report(5, ok, buf);
}

// 6. Combinatorial invariants of the Gray table (floored bound), the
//    linearly independent suffix cover and the first-appearance families.
void criterion_6() {
  bool ok = true;
  // Gray tables across the admissible (n, m) grid.
  for (int n = 2; n <= 10 && ok; ++n) {
    const int hi = std::max(2 * n, (1 << n) / n);
    for (int m = 2 * n; m <= hi && ok; m += 2) {
      const GrayTable g = build_gray_table(n, m);
      std::set<uint64_t> all;
      for (int j = 0; j < g.ell && ok; ++j) {
        for (int k = 0; k < g.cols; ++k) all.insert(g.entry(j, k).to_index());
        for (int b = g.t; b < g.n; ++b) ok = ok && !g.entry(j, 0).get(b);
        for (int k = 0; k + 1 < g.cols && ok; ++k) {
          size_t dist = 0;
          for (size_t b = 0; b < size_t(g.n); ++b)
            dist += g.entry(j, k).get(b) != g.entry(j, k + 1).get(b);
          ok = dist == 1;
        }
      }
      ok = ok && all.size() == size_t{1} << n;
      const int bound = m / (2 * (n - g.t)) + 1;
      for (int k = 0; k + 1 < g.cols && ok; ++k) {
        std::vector<int> counts(g.n, 0);
        for (int j = 0; j < g.ell; ++j) ++counts[g.flip(j, k)];
        for (int b = g.t; b < g.n; ++b) ok = ok && counts[b] <= bound;
      }
    }
  }
  // Suffix covers up to r_t = 10.
  for (int rt = 1; rt <= 10 && ok; ++rt) {
    const SuffixCover cover = independent_cover(rt);
    std::set<uint64_t> covered;
    for (const auto& set : cover.sets) {
      ok = ok && set.size() == size_t(rt) &&
           rank(BitMatrix::from_rows(set)) == size_t(rt);
      for (const BitVector& v : set) covered.insert(v.to_index());
    }
    ok = ok && covered.size() == (size_t{1} << rt) - 1;
    ok = ok && !covered.count(0);
    ok = ok && double(cover.ell()) <= std::ldexp(1.0, rt + 2) / (rt + 1) - 1;
  }
  // First-appearance families: disjoint, and their union misses exactly the
  // all-zero-suffix strings.
  for (int rc = 1; rc <= 5 && ok; ++rc) {
    for (int rt = 1; rt <= 5 && ok; ++rt) {
      const SuffixCover cover = independent_cover(rt);
      const FkFamily fam = fk_families(cover, rc);
      for (uint64_t t = 0; t < (uint64_t{1} << rt) && ok; ++t) {
        int owners = 0;
        for (int k = 1; k <= cover.ell(); ++k) owners += fam.member(t, k);
        ok = owners == (t == 0 ? 0 : 1);
      }
    }
  }
  report(6, ok,
         "gray-table properties 1-3 (floored), cover rank/union/ell bound "
         "(r_t <= 10), F_k disjointness and union (r_c, r_t <= 5)");
}

// 7. Walsh-Hadamard solve: residual <= 1e-9 for n <= 12 and O(n 2^n)
//    scaling, n=16 vs n=12 measured within 2.5x of the predicted 21.3x.
void criterion_7() {
  bool ok = true;
  double worst = 0;
  for (uint32_t n = 1; n <= 12; ++n) {
    std::mt19937_64 rng(700 + n);
    const PhaseVector pv = random_thetas(rng, n);
    const AlphaVector a = alphas_from_thetas(pv);
    const PhaseVector back = thetas_from_alphas(a);
    for (size_t x = 0; x < back.theta.size(); ++x)
      worst = std::max(worst,
                       std::abs(wrap_angle(back.theta[x] - pv.theta[x])));
  }
  ok = worst <= 1e-9;

  auto time_solve = [](uint32_t n, int reps) {
    std::mt19937_64 rng(99);
    const PhaseVector pv = random_thetas(rng, n);
    double best = 1e300;
    for (int batch = 0; batch < 3; ++batch) {
      const auto t0 = Clock::now();
      for (int i = 0; i < reps; ++i) {
        const AlphaVector a = alphas_from_thetas(pv);
        if (a.alpha.size() == 1) std::abort();  // keep the optimizer honest
      }
      best = std::min(best, seconds_since(t0) / reps);
    }
    return best;
  };
  const double t12 = time_solve(12, 400);
  const double t16 = time_solve(16, 25);
  const double ratio = t16 / t12;
  const double predicted = (16.0 * 65536.0) / (12.0 * 4096.0);  // 21.33
  ok = ok && ratio <= predicted * 2.5 && ratio >= predicted / 2.5;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "walsh-hadamard round trip max err %.1e; time ratio "
                "n16/n12 = %.1fx (predicted 21.3x, tolerance 2.5x)",
                worst, ratio);
  report(7, ok, buf);
}

// 8. Encoding transform: exhaustive unary -> binary for t in {2, 4, 6} with
//    clean ancillas, and measured depth linear in t (R^2 >= 0.9).
void criterion_8() {
  bool ok = true;
  std::vector<double> ts, ds;
  for (uint32_t t : {2u, 4u, 6u}) {
    const Circuit c = encoding_transform(t);
    for (uint64_t i = 0; i < (uint64_t{1} << t) && ok; ++i) {
      BitVector in(c.num_qubits());
      in.set(i, true);
      SparseState out = run_sparse(c, SparseState::basis(c.num_qubits(), in));
      BitVector want(c.num_qubits());
      for (uint32_t b = 0; b < t; ++b)
        if ((i >> (t - 1 - b)) & 1) want.set(b, true);
      ok = out.support_size() == 1 &&
           std::abs(std::abs(out.amplitude_prefix(want)) - 1.0) <= 1e-9;
    }
    ts.push_back(t);
    ds.push_back(depth(c).depth);
  }
  // R^2 of the least-squares line depth ~ c0 + c1 t.
  double mt = 0, md = 0;
  for (size_t i = 0; i < 3; ++i) mt += ts[i] / 3, md += ds[i] / 3;
  double sxy = 0, sxx = 0, stot = 0;
  for (size_t i = 0; i < 3; ++i) {
    sxy += (ts[i] - mt) * (ds[i] - md);
    sxx += (ts[i] - mt) * (ts[i] - mt);
    stot += (ds[i] - md) * (ds[i] - md);
  }
  const double slope = sxy / sxx;
  double sres = 0;
  for (size_t i = 0; i < 3; ++i) {
    const double fit = md + slope * (ts[i] - mt);
    sres += (ds[i] - fit) * (ds[i] - fit);
  }
  const double r2 = stot > 0 ? 1.0 - sres / stot : 1.0;
  ok = ok && r2 >= 0.9;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "encoding transform exact for t in {2,4,6}; depths %g/%g/%g, "
                "linear fit R^2 = %.3f (>= 0.9)",
                ds[0], ds[1], ds[2], r2);
  report(8, ok, buf);
}

// 9. Sparse preparation fidelity across support sizes, widths and budgets.
void criterion_9() {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst = 1.0;
  std::mt19937_64 rng(900);
  std::normal_distribution<double> g(0.0, 1.0);
  for (uint32_t n : {10u, 16u, 20u}) {
    for (size_t s : {size_t{1}, size_t{2}, size_t{16}, size_t{64}}) {
      SparseTarget target;
      target.n = n;
      std::set<uint64_t> seen;
      std::uniform_int_distribution<uint64_t> d(0, (uint64_t{1} << n) - 1);
      double n2 = 0;
      while (target.entries.size() < s) {
        const uint64_t x = d(rng);
        if (!seen.insert(x).second) continue;
        const Cx a{g(rng), g(rng)};
        n2 += std::norm(a);
        target.entries.emplace_back(BitVector::from_index(x, n), a);
      }
      for (auto& [bits, amp] : target.entries) amp /= std::sqrt(n2);
      for (uint64_t m : {uint64_t{0}, uint64_t{4} * n, uint64_t{8} * s}) {
        const Circuit c = prepare_sparse(target, m);
        SparseState out = run_sparse(c, SparseState::zero(c.num_qubits()));
        SparseState want(c.num_qubits());
        for (const auto& [bits, amp] : target.entries) {
          BasisKey key{std::vector<uint64_t>((c.num_qubits() + 63) / 64, 0)};
          for (uint32_t b = 0; b < n; ++b)
            if (bits.get(b)) key.flip(b);
          want.set_amplitude(key, amp);
        }
        const double f = fidelity(out, want);
        worst = std::min(worst, f);
        ok = ok && f >= 1 - 1e-9;
      }
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "sparse prep s in {1,2,16,64}, n in {10,16,20}, m in "
                "{0,4n,8s}: min fidelity 1-%.1e, %.1fs (budget 60s)",
                1 - worst, secs);
  report(9, ok, buf);
}

// 10. Out-of-desk-scale items stay formulas: the bounds calculator reports
//     the four expressions and the regime rows; no middle-regime constant or
//     Clifford+T figure is asserted anywhere in this suite.
void criterion_10() {
  bool ok = true;
  for (uint32_t n : {4u, 10u, 16u}) {
    for (uint64_t m : {uint64_t{0}, uint64_t{1} << 6, uint64_t{1} << 16}) {
      const BoundsRecord r = bounds(n, m);
      ok = ok && r.qsp_lower <= r.unitary_upper &&
           r.unitary_lower <= r.unitary_upper && !r.qsp_upper_regime.empty();
    }
  }
  ok = ok && bounds(10, 1 << 10).qsp_upper_regime == "Theta(n)";
  report(10, ok,
         "bounds calculator reports formulas only (middle-regime constants "
         "and Clifford+T rows excluded by design)");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
