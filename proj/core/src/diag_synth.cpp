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

#include "qsprep/diag_synth.hpp"

#include <algorithm>
#include <cstdio>

#include "qsprep/gadgets.hpp"

namespace qsprep {

namespace {

void check_alpha(const AlphaVector& alpha, uint32_t n) {
  if (alpha.n != n || alpha.alpha.size() != (size_t{1} << n))
    throw ValidationError("alpha vector width mismatch");
  if (alpha.alpha[0] != 0.0)
    throw ValidationError("alpha vector must have alpha[0] = 0");
}

bool emit_rotation(const DiagOptions& o, double angle) {
  return o.force_emission || std::abs(angle) > o.zero_angle_threshold;
}

std::string step_tag(int step) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "step %02d", step);
  return buf;
}

}  // namespace

DiagPlan plan_diag_ancilla(uint32_t n, uint64_t m) {
  if (n < 1) throw ValidationError("diagonal width must be >= 1");
  if (m < 2 * uint64_t{n})
    throw RegimeError("ancilla construction needs m >= 2n");
  const uint64_t pow_cap = n >= 2 ? (uint64_t{1} << n) / n : 2;
  const uint64_t cap = std::max<uint64_t>(2 * uint64_t{n}, pow_cap);
  uint64_t used = std::min(m, cap);
  used -= used % 2;
  DiagPlan plan;
  plan.n = n;
  plan.m_used = static_cast<uint32_t>(used);
  plan.mode = DiagMode::Ancilla;
  return plan;
}

Circuit synth_diag_ancilla(const AlphaVector& alpha, uint32_t n, uint64_t m,
                           const DiagOptions& opts) {
  check_alpha(alpha, n);
  const DiagPlan plan = plan_diag_ancilla(n, m);
  const uint32_t mu = plan.m_used;
  Circuit c(n + mu);
  c.add_register("input", RegisterRole::Input, 0, n);
  c.add_register("copy", RegisterRole::Copy, n, mu / 2);
  c.add_register("phase", RegisterRole::Phase, n + mu / 2, mu / 2);
  if (n == 1) {
    c.set_stage("step 01");
    if (emit_rotation(opts, alpha.alpha[1])) c.phase(alpha.alpha[1], 0);
    return c;
  }

  const GrayTable g = build_gray_table(n, static_cast<int>(mu));
  const uint32_t t = g.t;
  const uint32_t ell = g.ell;
  const uint32_t cols = g.cols;
  const uint32_t copy_base = n;
  const uint32_t phase_base = n + mu / 2;
  const uint32_t pc = mu / (2 * t);            // copies per prefix variable
  const uint32_t sc = mu / (2 * (n - t));      // copies per suffix variable

  int step = 0;
  std::vector<std::pair<uint32_t, uint32_t>> cnot_log;  // for the inverse stage
  auto cnot = [&](uint32_t ctrl, uint32_t tgt) {
    c.cnot(ctrl, tgt);
    cnot_log.emplace_back(ctrl, tgt);
  };

  // Stage 1: prefix copy. Doubling tree, one step per round; copy slot
  // layout is variable-major: slot v*pc + r holds copy r of x_{v+1}.
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> prefix_layers;
  {
    std::vector<std::vector<uint32_t>> avail(t);
    std::vector<uint32_t> next(t, 0);
    for (uint32_t v = 0; v < t; ++v) avail[v] = {v};
    bool work = true;
    while (work) {
      work = false;
      std::vector<std::pair<uint32_t, uint32_t>> layer;
      std::vector<std::vector<uint32_t>> fresh(t);
      for (uint32_t v = 0; v < t; ++v) {
        const uint32_t have = static_cast<uint32_t>(avail[v].size());
        for (uint32_t r = 0; r < have && next[v] < pc; ++r) {
          const uint32_t tgt = copy_base + v * pc + next[v];
          layer.emplace_back(avail[v][r], tgt);
          fresh[v].push_back(tgt);
          ++next[v];
        }
        if (next[v] < pc) work = true;
      }
      if (!layer.empty()) {
        c.set_stage(step_tag(++step));
        for (auto [a, b] : layer) cnot(a, b);
        prefix_layers.push_back(std::move(layer));
      }
      for (uint32_t v = 0; v < t; ++v)
        avail[v].insert(avail[v].end(), fresh[v].begin(), fresh[v].end());
    }
  }

  // Stage 2: Gray initial. Mini-steps of t*pc phase qubits; in layer r,
  // block b receives variable (b + r + 1) mod t through its pc copies.
  const uint32_t group = t * pc;
  for (uint32_t ms = 0; ms < ell; ms += group) {
    for (uint32_t r = 0; r < t; ++r) {
      std::vector<std::pair<uint32_t, uint32_t>> layer;
      for (uint32_t j = ms; j < std::min(ms + group, ell); ++j) {
        const uint32_t b = (j - ms) / pc;
        const uint32_t pos = (j - ms) % pc;
        const uint32_t v = (b + r + 1) % t;
        if (g.entry(j, 0).get(v))
          layer.emplace_back(copy_base + v * pc + pos, phase_base + j);
      }
      if (!layer.empty()) {
        c.set_stage(step_tag(++step));
        for (auto [a, bq] : layer) cnot(a, bq);
      }
    }
  }
  {
    // Rotation layer R_1.
    bool any = false;
    for (uint32_t j = 0; j < ell; ++j) {
      const uint64_t s = g.entry(j, 0).to_index();
      if (s != 0 && emit_rotation(opts, alpha.alpha[s])) {
        if (!any) c.set_stage(step_tag(++step));
        any = true;
        c.phase(alpha.alpha[s], phase_base + j);
      }
    }
  }

  // Stage 3: suffix copy = undo prefix copy, then fan out the suffix
  // variables (slot layout (u-t)*sc + r).
  for (auto it = prefix_layers.rbegin(); it != prefix_layers.rend(); ++it) {
    c.set_stage(step_tag(++step));
    for (auto [a, b] : *it) cnot(a, b);
  }
  {
    std::vector<std::vector<uint32_t>> avail(n - t);
    std::vector<uint32_t> next(n - t, 0);
    for (uint32_t u = 0; u < n - t; ++u) avail[u] = {t + u};
    bool work = true;
    while (work) {
      work = false;
      std::vector<std::pair<uint32_t, uint32_t>> layer;
      std::vector<std::vector<uint32_t>> fresh(n - t);
      for (uint32_t u = 0; u < n - t; ++u) {
        const uint32_t have = static_cast<uint32_t>(avail[u].size());
        for (uint32_t r = 0; r < have && next[u] < sc; ++r) {
          const uint32_t tgt = copy_base + u * sc + next[u];
          layer.emplace_back(avail[u][r], tgt);
          fresh[u].push_back(tgt);
          ++next[u];
        }
        if (next[u] < sc) work = true;
      }
      if (!layer.empty()) {
        c.set_stage(step_tag(++step));
        for (auto [a, b] : layer) cnot(a, b);
      }
      for (uint32_t u = 0; u < n - t; ++u)
        avail[u].insert(avail[u].end(), fresh[u].begin(), fresh[u].end());
    }
  }

  // Stage 4: Gray path. One CNOT step and one rotation step per column
  // transition; controls round-robin over the input bit and its copies.
  for (uint32_t k = 1; k < cols; ++k) {
    std::vector<uint32_t> uses(n - t, 0);
    c.set_stage(step_tag(++step));
    for (uint32_t j = 0; j < ell; ++j) {
      const uint32_t u = static_cast<uint32_t>(g.flip(j, k - 1));  // global bit
      const uint32_t slot = uses[u - t]++;
      if (slot > sc)
        throw Error("gray path exceeded the available copies of a variable");
      const uint32_t ctrl = slot == 0 ? u : copy_base + (u - t) * sc + (slot - 1);
      cnot(ctrl, phase_base + j);
    }
    bool any = false;
    for (uint32_t j = 0; j < ell; ++j) {
      const uint64_t s = g.entry(j, k).to_index();
      if (s != 0 && emit_rotation(opts, alpha.alpha[s])) {
        if (!any) c.set_stage(step_tag(++step));
        any = true;
        c.phase(alpha.alpha[s], phase_base + j);
      }
    }
  }

  // Stage 5: inverse. Every CNOT of stages 1-4 replayed in reverse restores
  // the copy and phase registers.
  c.set_stage(step_tag(++step));
  for (auto it = cnot_log.rbegin(); it != cnot_log.rend(); ++it)
    c.cnot(it->first, it->second);
  c.set_stage("");
  return c;
}

namespace {

struct NoAncillaCtx {
  const DiagOptions& opts;
};

// Gray path stage of G_k appended in place; qubit 0..r_c-1 control register,
// r_c..n-1 target register.
void append_gray_path(Circuit& c, int k, const SuffixCover& cover,
                      const FkFamily& fk, const AlphaVector& alpha,
                      const DiagOptions& opts, uint32_t r_c) {
  const uint32_t r_t = cover.r_t;
  const auto& set_k = cover.sets[k - 1];
  std::vector<uint64_t> suffix_val(r_t);
  std::vector<bool> first(r_t);
  for (uint32_t i = 0; i < r_t; ++i) {
    suffix_val[i] = set_k[i].to_index();
    first[i] = fk.member(suffix_val[i], k);
  }
  std::vector<std::vector<BitVector>> cycles(r_t);
  for (uint32_t i = 0; i < r_t; ++i) cycles[i] = gray_cycle(int(i) + 1, int(r_c));

  // Phase 1: rotations for the zero prefix.
  for (uint32_t i = 0; i < r_t; ++i) {
    if (!first[i]) continue;
    const double a = alpha.alpha[suffix_val[i]];
    if (emit_rotation(opts, a)) c.phase(a, r_c + i);
  }
  // Phases 2..2^{r_c}: one CNOT from the control register plus a rotation.
  const uint64_t np = uint64_t{1} << r_c;
  for (uint64_t p = 2; p <= np; ++p) {
    for (uint32_t i = 0; i < r_t; ++i) {
      const uint32_t h = (ruler(p - 1) + i + r_c - 1) % r_c;  // 0-based
      c.cnot(h, r_c + i);
    }
    for (uint32_t i = 0; i < r_t; ++i) {
      if (!first[i]) continue;
      const uint64_t prefix = cycles[i][p - 1].to_index();
      const double a = alpha.alpha[(prefix << fk.r_t) | suffix_val[i]];
      if (emit_rotation(opts, a)) c.phase(a, r_c + i);
    }
  }
  // Closing phase: return each row to the zero prefix.
  for (uint32_t i = 0; i < r_t; ++i) {
    const uint32_t h = (r_c + i + r_c - 1) % r_c;
    c.cnot(h, r_c + i);
  }
}

}  // namespace

Circuit build_Gk(int k, const SuffixCover& cover, const FkFamily& fk,
                 const AlphaVector& alpha, const DiagOptions& opts) {
  if (k < 1 || k > cover.ell()) throw ValidationError("build_Gk: k out of range");
  const uint32_t r_t = cover.r_t;
  const uint32_t r_c = fk.r_c;
  if (r_t > r_c)
    throw ValidationError(
        "gray path needs r_t <= r_c so the per-phase controls stay distinct");
  check_alpha(alpha, r_c + r_t);
  Circuit c(r_c + r_t);
  c.add_register("control", RegisterRole::Control, 0, r_c);
  c.add_register("target", RegisterRole::Target, r_c, r_t);
  std::vector<uint32_t> target_qubits(r_t);
  for (uint32_t i = 0; i < r_t; ++i) target_qubits[i] = r_c + i;

  c.set_stage("generate");
  const BitMatrix prev = k == 1 ? BitMatrix::identity(r_t)
                                : BitMatrix::from_rows(cover.sets[k - 2]);
  const BitMatrix cur = BitMatrix::from_rows(cover.sets[k - 1]);
  append_cnot_network(c, matmul(cur, invert(prev)), target_qubits);
  c.set_stage("gray path");
  append_gray_path(c, k, cover, fk, alpha, opts, r_c);
  c.set_stage("");
  return c;
}

Circuit build_reset(const SuffixCover& cover) {
  const uint32_t r_t = cover.r_t;
  Circuit c(r_t);
  std::vector<uint32_t> qubits(r_t);
  for (uint32_t i = 0; i < r_t; ++i) qubits[i] = i;
  const BitMatrix last = BitMatrix::from_rows(cover.sets.back());
  append_cnot_network(c, invert(last), qubits);
  return c;
}

Circuit synth_diag_no_ancilla(const AlphaVector& alpha, uint32_t n,
                              const DiagOptions& opts) {
  if (n < 1) throw ValidationError("diagonal width must be >= 1");
  check_alpha(alpha, n);
  Circuit c(n);
  if (n <= 2) {
    c.set_stage("base");
    for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
      if (!emit_rotation(opts, alpha.alpha[s])) continue;
      const BitVector mask = BitVector::from_index(s, n);
      c.append(phase_parity(mask, alpha.alpha[s], false, std::nullopt, n));
    }
    c.set_stage("");
    return c;
  }

  const uint32_t r_t = n / 2;
  const uint32_t r_c = n - r_t;
  c.add_register("control", RegisterRole::Control, 0, r_c);
  c.add_register("target", RegisterRole::Target, r_c, r_t);
  const SuffixCover cover = independent_cover(static_cast<int>(r_t));
  const FkFamily fk = fk_families(cover, static_cast<int>(r_c));
  std::vector<uint32_t> target_qubits(r_t);
  for (uint32_t i = 0; i < r_t; ++i) target_qubits[i] = r_c + i;

  // A stage whose first-appearance suffixes all carry negligible angles can
  // be skipped entirely; the next emitted stage folds the missed basis
  // change into its generate network.
  BitMatrix prev = BitMatrix::identity(r_t);
  bool moved = false;
  for (int k = 1; k <= cover.ell(); ++k) {
    bool any = opts.force_emission &&
               std::any_of(cover.sets[k - 1].begin(), cover.sets[k - 1].end(),
                           [&](const BitVector& t) {
                             return fk.member(t.to_index(), k);
                           });
    if (!any) {
      for (uint32_t i = 0; i < r_t && !any; ++i) {
        const uint64_t tv = cover.sets[k - 1][i].to_index();
        if (!fk.member(tv, k)) continue;
        for (uint64_t p = 0; p < (uint64_t{1} << r_c) && !any; ++p)
          if (std::abs(alpha.alpha[(p << r_t) | tv]) > opts.zero_angle_threshold)
            any = true;
      }
    }
    if (!any) continue;
    const BitMatrix cur = BitMatrix::from_rows(cover.sets[k - 1]);
    c.set_stage("gen " + std::to_string(k));
    append_cnot_network(c, matmul(cur, invert(prev)), target_qubits);
    c.set_stage("path " + std::to_string(k));
    append_gray_path(c, k, cover, fk, alpha, opts, r_c);
    prev = cur;
    moved = true;
  }
  if (moved) {
    c.set_stage("reset");
    append_cnot_network(c, invert(prev), target_qubits);
  }
  c.set_stage("");

  // The all-zero-suffix strings c0^{r_t} recurse on the control register.
  AlphaVector sub;
  sub.n = r_c;
  sub.alpha.resize(size_t{1} << r_c);
  for (uint64_t p = 0; p < (uint64_t{1} << r_c); ++p)
    sub.alpha[p] = alpha.alpha[p << r_t];
  bool sub_any = false;
  for (double a : sub.alpha) sub_any |= std::abs(a) > opts.zero_angle_threshold;
  if (sub_any || opts.force_emission) {
    Circuit rec = synth_diag_no_ancilla(sub, r_c, opts);
    std::vector<uint32_t> map(r_c);
    for (uint32_t i = 0; i < r_c; ++i) map[i] = i;
    c.append_mapped(rec, map, "rc/");
  }
  return c;
}

}  // namespace qsprep
