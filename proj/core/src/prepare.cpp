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

#include "qsprep/prepare.hpp"

#include <algorithm>
#include <cmath>

#include "qsprep/gadgets.hpp"

namespace qsprep {

namespace {

constexpr double kAngleEps = 1e-12;

uint32_t log2_exact_or_throw(size_t len) {
  uint32_t n = 0;
  while ((size_t{1} << n) < len) ++n;
  if ((size_t{1} << n) != len)
    throw ValidationError("state length must be a power of 2");
  return n;
}

void check_unit_norm(const std::vector<Cx>& v) {
  double n2 = 0;
  for (const Cx& a : v) n2 += std::norm(a);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-10)
    throw ValidationError("state vector must have unit l2 norm");
}

bool phase_vector_trivial(const PhaseVector& pv) {
  for (double t : pv.theta)
    if (std::abs(t) > kAngleEps) return false;
  return true;
}

// Synthesize diag(e^{i theta}) on `width` qubits of `dst`; the first `width`
// entries of map are the diagonal's qubits, ancillas are taken from
// anc_base when the budget admits the copy/phase construction.
void append_diagonal(Circuit& dst, const PhaseVector& pv, uint64_t m,
                     uint32_t anc_base) {
  if (pv.n == 0 || phase_vector_trivial(pv)) return;
  const AlphaVector alpha = alphas_from_thetas(pv);
  const uint32_t w = pv.n;
  if (m >= 2 * uint64_t{w} && w >= 2) {
    const Circuit sub = synth_diag_ancilla(alpha, w, m);
    std::vector<uint32_t> map(sub.num_qubits());
    for (uint32_t q = 0; q < w; ++q) map[q] = q;
    for (uint32_t q = w; q < sub.num_qubits(); ++q)
      map[q] = anc_base + (q - w);
    dst.append_mapped(sub, map);
  } else {
    const Circuit sub = synth_diag_no_ancilla(alpha, w);
    std::vector<uint32_t> map(w);
    for (uint32_t q = 0; q < w; ++q) map[q] = q;
    dst.append_mapped(sub, map);
  }
}

}  // namespace

Strategy strategy_from_label(std::string_view label) {
  if (label == "auto") return Strategy::Auto;
  if (label == "ucg") return Strategy::Ucg;
  if (label == "hybrid") return Strategy::Hybrid;
  if (label == "no-ancilla" || label == "no_ancilla") return Strategy::NoAncilla;
  throw ValidationError("unknown strategy: " + std::string(label));
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Ucg: return "ucg";
    case Strategy::Hybrid: return "hybrid";
    case Strategy::NoAncilla: return "no-ancilla";
  }
  return "?";
}

void append_global_phase(Circuit& c, double g, uint32_t qubit) {
  if (std::abs(wrap_angle(g)) <= 1e-15) return;
  c.rz(-2 * g, qubit);
  c.phase(2 * g, qubit);
}

uint32_t ucg_ancilla_width(uint32_t j, uint64_t m) {
  if (j >= 2 && m >= 2 * uint64_t{j}) return plan_diag_ancilla(j, m).m_used;
  if (j >= 3 && m >= 2 * uint64_t{j - 1}) return plan_diag_ancilla(j - 1, m).m_used;
  return 0;
}

Circuit ucg_circuit(const std::vector<Mat2>& level, uint32_t j, uint64_t m) {
  if (level.size() != (size_t{1} << (j - 1)) || j < 1)
    throw ValidationError("UCG level size must be 2^{j-1}");
  const uint32_t mu = ucg_ancilla_width(j, m);
  Circuit c(j + mu);
  const uint32_t target = j - 1;
  const UcgDiagonals d = ucg_to_diagonals(level);
  double global = d.global_phase;

  // V = A1.A2.(I (x) SH).A4.(I (x) HS+).A6, emitted right to left. When the
  // middle rotation layer is empty the basis-change sandwich cancels out.
  append_diagonal(c, d.a6, m, j);
  if (!phase_vector_trivial(d.a4)) {
    c.sdg(target);
    c.h(target);
    append_diagonal(c, d.a4, m, j);
    c.h(target);
    c.s(target);
  }
  append_diagonal(c, d.a2, m, j);
  append_diagonal(c, d.a1, m, j);
  append_global_phase(c, global, 0);
  return c;
}

Circuit unary_qsp(const std::vector<Cx>& v) {
  check_unit_norm(v);
  const uint32_t t = log2_exact_or_throw(v.size());
  const uint32_t width = static_cast<uint32_t>(v.size());
  Circuit c(width);
  c.x(0);
  // sum2[k] at depth d holds the squared norm of block k (size 2^{t-d}).
  std::vector<double> sum2(v.size());
  for (size_t i = 0; i < v.size(); ++i) sum2[i] = std::norm(v[i]);
  std::vector<std::vector<double>> levels(t + 1);
  levels[t] = sum2;
  for (uint32_t d = t; d-- > 0;) {
    levels[d].resize(size_t{1} << d);
    for (size_t k = 0; k < levels[d].size(); ++k)
      levels[d][k] = levels[d + 1][2 * k] + levels[d + 1][2 * k + 1];
  }
  for (uint32_t d = 0; d < t; ++d) {
    const uint32_t stride = 1u << (t - d);
    for (uint32_t k = 0; k < (1u << d); ++k) {
      const double parent = levels[d][k];
      const double right = levels[d + 1][2 * k + 1];
      if (parent <= 1e-300 || right <= 1e-300) continue;
      const double theta = std::atan2(std::sqrt(right),
                                      std::sqrt(levels[d + 1][2 * k]));
      const uint32_t a = k * stride;
      const uint32_t b = a + stride / 2;
      // Controlled-Ry(2 theta) then CNOT moves the sin branch onto wire b.
      c.ry(theta, b);
      c.cnot(a, b);
      c.ry(-theta, b);
      c.cnot(a, b);
      c.cnot(b, a);
    }
  }
  for (uint32_t k = 0; k < width; ++k) {
    if (std::abs(v[k]) <= 1e-300) continue;
    const double arg = std::arg(v[k]);
    if (std::abs(arg) > 1e-15) c.phase(arg, k);
  }
  return c;
}

namespace {

// Unary block of 2^k wires -> binary on bin wires (assumed |0>), clearing
// the unary block; scratch wires are |0> and restored.
void append_unary_to_binary(Circuit& c, const std::vector<uint32_t>& unary,
                            const std::vector<uint32_t>& bin,
                            const std::vector<uint32_t>& scratch) {
  const uint32_t k = static_cast<uint32_t>(bin.size());
  const size_t nw = unary.size();
  // Binarize: bit j of the index is the parity of the matching unary wires,
  // fanned in on per-bit copies of the unary block so the k fan-ins run in
  // parallel.
  std::vector<std::vector<uint32_t>> copy_sets(k);
  copy_sets[0] = unary;
  Circuit copies(c.num_qubits());
  if (k > 1) {
    std::vector<uint32_t> targets((k - 1) * nw);
    for (uint32_t cs = 1; cs < k; ++cs) {
      copy_sets[cs].resize(nw);
      for (size_t wire = 0; wire < nw; ++wire) {
        const uint32_t q = scratch.at((cs - 1) * nw + wire);
        copy_sets[cs][wire] = q;
        targets[wire * (k - 1) + (cs - 1)] = q;
      }
    }
    copies = fanout_copy(unary, k - 1, targets, c.num_qubits());
    c.append(copies);
  }
  for (uint32_t j = 0; j < k; ++j) {
    QubitSet controls;
    for (size_t w = 0; w < nw; ++w)
      if ((w >> (k - 1 - j)) & 1) controls.push_back(copy_sets[j][w]);
    append_parity_fanin(c, controls, bin[j]);
  }
  if (k > 1) c.append(invert(copies));

  // Clear the unary block: one multi-controlled X per value, each running
  // on its own copy of the binary register. Every instance also gets k-2
  // clean borrowed wires so the MCX expands into the Toffoli ladder, which
  // is a plain basis permutation (the halving recursion would transiently
  // triple the sparse support of a superposed input).
  Circuit bin_copies(c.num_qubits());
  std::vector<std::vector<uint32_t>> bsets(nw);
  bsets[0] = bin;
  size_t scratch_used = 0;
  if (nw > 1) {
    std::vector<uint32_t> targets((nw - 1) * k);
    for (size_t cs = 1; cs < nw; ++cs) {
      bsets[cs].resize(k);
      for (uint32_t bitq = 0; bitq < k; ++bitq) {
        const uint32_t q = scratch.at((cs - 1) * k + bitq);
        bsets[cs][bitq] = q;
        targets[bitq * (nw - 1) + (cs - 1)] = q;
      }
    }
    scratch_used = (nw - 1) * k;
    bin_copies = fanout_copy(bin, static_cast<uint32_t>(nw - 1), targets,
                             c.num_qubits());
    c.append(bin_copies);
  }
  const size_t borrow_per = k > 2 ? k - 2 : 0;
  for (size_t s = 0; s < nw; ++s) {
    const auto& ctrl = bsets[s];
    QubitSet borrowed;
    for (size_t i = 0; i < borrow_per; ++i)
      borrowed.push_back(scratch.at(scratch_used + s * borrow_per + i));
    for (uint32_t j = 0; j < k; ++j)
      if (!((s >> (k - 1 - j)) & 1)) c.x(ctrl[j]);
    append_mcx(c, ctrl, unary[s], borrowed);
    for (uint32_t j = 0; j < k; ++j)
      if (!((s >> (k - 1 - j)) & 1)) c.x(ctrl[j]);
  }
  if (nw > 1) c.append(invert(bin_copies));
}

}  // namespace

Circuit encoding_transform(uint32_t t) {
  if (t < 2) throw ValidationError("encoding transform needs t >= 2");
  const uint32_t t1 = (t + 1) / 2, t2 = t - t1;
  const uint32_t n1 = 1u << t1, n2 = 1u << t2;
  const uint32_t na = 1u << t;
  const uint32_t width = 3 * na;
  Circuit c(width);
  c.add_register("unary", RegisterRole::Input, 0, na);
  c.add_register("work", RegisterRole::Ancilla, na, 2 * na);
  const uint32_t b1 = na, b2 = na + n1, spare = b2 + n2;

  // Step 1a: split |e_i> (i = s*n2 + u) into row and column one-hots.
  c.set_stage("pair split");
  for (uint32_t s = 0; s < n1; ++s) {
    QubitSet row(n2);
    for (uint32_t u = 0; u < n2; ++u) row[u] = s * n2 + u;
    append_parity_fanin(c, row, b1 + s);
  }
  for (uint32_t u = 0; u < n2; ++u) {
    QubitSet col(n1);
    for (uint32_t s = 0; s < n1; ++s) col[s] = s * n2 + u;
    append_parity_fanin(c, col, b2 + u);
  }

  // Step 1b: clear the big unary register with one Toffoli per value,
  // parallelized over n2 copy-sets of (B1, B2). Odd t runs the s-range in
  // two halves so each copy-set sees distinct control wires.
  c.set_stage("pair clear");
  {
    QubitSet sources;
    for (uint32_t q = 0; q < n1; ++q) sources.push_back(b1 + q);
    for (uint32_t q = 0; q < n2; ++q) sources.push_back(b2 + q);
    const uint32_t copies = n2 - 1;
    Circuit copy_circ(width);
    std::vector<std::vector<uint32_t>> setb1(n2), setb2(n2);
    setb1[0].resize(n1);
    setb2[0].resize(n2);
    for (uint32_t q = 0; q < n1; ++q) setb1[0][q] = b1 + q;
    for (uint32_t q = 0; q < n2; ++q) setb2[0][q] = b2 + q;
    if (copies > 0) {
      std::vector<uint32_t> targets(sources.size() * copies);
      for (uint32_t cs = 1; cs <= copies; ++cs) {
        const uint32_t base = spare + (cs - 1) * (n1 + n2);
        setb1[cs].resize(n1);
        setb2[cs].resize(n2);
        for (uint32_t q = 0; q < n1; ++q) {
          setb1[cs][q] = base + q;
          targets[q * copies + (cs - 1)] = base + q;
        }
        for (uint32_t q = 0; q < n2; ++q) {
          setb2[cs][q] = base + n1 + q;
          targets[(n1 + q) * copies + (cs - 1)] = base + n1 + q;
        }
      }
      copy_circ = fanout_copy(sources, copies, targets, width);
      c.append(copy_circ);
    }
    const uint32_t halves = t1 == t2 ? 1 : 2;
    for (uint32_t half = 0; half < halves; ++half) {
      for (uint32_t s = half * n2; s < (half + 1) * n2 && s < n1; ++s) {
        for (uint32_t u = 0; u < n2; ++u) {
          const uint32_t cs = (s + u) % n2;
          append_toffoli(c, setb1[cs][s], setb2[cs][u], s * n2 + u);
        }
      }
    }
    if (copies > 0) c.append(invert(copy_circ));
  }

  // Step 2: binarize each half; the high bits land on wires 0..t1-1, the
  // low bits on t1..t-1. The cleared unary register plus the spare block
  // serve as scratch.
  c.set_stage("binarize hi");
  {
    std::vector<uint32_t> unary(n1), bin(t1), scratch;
    for (uint32_t q = 0; q < n1; ++q) unary[q] = b1 + q;
    for (uint32_t q = 0; q < t1; ++q) bin[q] = q;
    for (uint32_t q = t1; q < na; ++q) scratch.push_back(q);
    for (uint32_t q = spare; q < width; ++q) scratch.push_back(q);
    append_unary_to_binary(c, unary, bin, scratch);
  }
  c.set_stage("binarize lo");
  {
    std::vector<uint32_t> unary(n2), bin(t2), scratch;
    for (uint32_t q = 0; q < n2; ++q) unary[q] = b2 + q;
    for (uint32_t q = 0; q < t2; ++q) bin[q] = t1 + q;
    for (uint32_t q = t; q < na; ++q) scratch.push_back(q);
    for (uint32_t q = b1; q < b1 + n1; ++q) scratch.push_back(q);
    for (uint32_t q = spare; q < width; ++q) scratch.push_back(q);
    append_unary_to_binary(c, unary, bin, scratch);
  }
  c.set_stage("");
  return c;
}

Circuit hybrid_qsp(const std::vector<Cx>& v, uint64_t m) {
  check_unit_norm(v);
  const uint32_t n = log2_exact_or_throw(v.size());
  uint32_t t = 0;
  while (t < n && (uint64_t{3} << (t + 1)) <= m) ++t;  // floor(log2(m/3)), capped
  if (t < 2 || (uint64_t{3} << t) > m)
    throw RegimeError("hybrid needs m >= 3 * 2^t with t >= 2");

  const AmplitudeTree tree = amplitude_tree(v);
  uint32_t mu = 3u << t;
  for (uint32_t j = t + 1; j <= n; ++j)
    mu = std::max(mu, ucg_ancilla_width(j, m));
  Circuit c(n + mu);
  c.add_register("input", RegisterRole::Input, 0, n);
  c.add_register("ancilla", RegisterRole::Ancilla, n, mu);
  const uint32_t anc = n;

  // Prefix amplitudes: subtree norms, except t = n where the full complex
  // vector rides the unary encoding directly.
  std::vector<Cx> vp(size_t{1} << t);
  if (t == n) {
    vp = v;
  } else {
    const size_t block = size_t{1} << (n - t);
    for (size_t k = 0; k < vp.size(); ++k) {
      double s2 = 0;
      for (size_t j = 0; j < block; ++j) s2 += std::norm(v[k * block + j]);
      vp[k] = std::sqrt(s2);
    }
  }
  {
    const Circuit loader = unary_qsp(vp);
    std::vector<uint32_t> map(loader.num_qubits());
    for (uint32_t q = 0; q < loader.num_qubits(); ++q) map[q] = anc + q;
    c.append_mapped(loader, map, "unary/");
  }
  {
    const Circuit enc = encoding_transform(t);
    std::vector<uint32_t> map(enc.num_qubits());
    for (uint32_t q = 0; q < enc.num_qubits(); ++q) map[q] = anc + q;
    c.append_mapped(enc, map, "encode/");
  }
  c.set_stage("relocate");
  for (uint32_t q = 0; q < t; ++q) {
    c.cnot(anc + q, q);
    c.cnot(q, anc + q);
  }
  c.set_stage("");
  for (uint32_t j = t + 1; j <= n; ++j) {
    const Circuit vj = ucg_circuit(tree.levels[j - 1], j, m);
    std::vector<uint32_t> map(vj.num_qubits());
    for (uint32_t q = 0; q < j; ++q) map[q] = q;
    for (uint32_t q = j; q < vj.num_qubits(); ++q) map[q] = anc + (q - j);
    c.append_mapped(vj, map, "ucg" + std::to_string(j) + "/");
  }
  return c;
}

PrepareResult prepare_state(const SynthesisRequest& req) {
  check_unit_norm(req.v);
  const uint32_t n = log2_exact_or_throw(req.v.size());
  Strategy chosen = req.strategy;
  uint32_t t_hybrid = 0;
  {
    uint32_t t = 0;
    while (t < n && (uint64_t{3} << (t + 1)) <= req.m) ++t;
    t_hybrid = t;
  }
  if (chosen == Strategy::Auto) {
    if (req.m < 2 * uint64_t{n} || n <= 1) {
      chosen = Strategy::NoAncilla;
    } else {
      uint32_t ceil_log_n = 0;
      while ((1u << ceil_log_n) < n) ++ceil_log_n;
      const uint32_t floor_t = std::max<uint32_t>(
          2, n > 2 * ceil_log_n ? n - 2 * ceil_log_n : 2);
      chosen = t_hybrid >= floor_t ? Strategy::Hybrid : Strategy::Ucg;
    }
  }

  PrepareResult res;
  res.decision.chosen = chosen;
  switch (chosen) {
    case Strategy::NoAncilla: {
      const AmplitudeTree tree = amplitude_tree(req.v);
      Circuit c(n);
      c.add_register("input", RegisterRole::Input, 0, n);
      for (uint32_t j = 1; j <= n; ++j) {
        const Circuit vj = ucg_circuit(tree.levels[j - 1], j, 0);
        std::vector<uint32_t> map(j);
        for (uint32_t q = 0; q < j; ++q) map[q] = q;
        c.append_mapped(vj, map, "ucg" + std::to_string(j) + "/");
      }
      res.circuit = std::move(c);
      res.decision.m_used = 0;
      res.decision.rationale = "ancilla-free recursion (m < 2n or forced)";
      break;
    }
    case Strategy::Ucg: {
      const AmplitudeTree tree = amplitude_tree(req.v);
      uint32_t mu = 0;
      for (uint32_t j = 1; j <= n; ++j)
        mu = std::max(mu, ucg_ancilla_width(j, req.m));
      Circuit c(n + mu);
      c.add_register("input", RegisterRole::Input, 0, n);
      if (mu > 0) c.add_register("ancilla", RegisterRole::Ancilla, n, mu);
      for (uint32_t j = 1; j <= n; ++j) {
        const Circuit vj = ucg_circuit(tree.levels[j - 1], j, req.m);
        std::vector<uint32_t> map(vj.num_qubits());
        for (uint32_t q = 0; q < j; ++q) map[q] = q;
        for (uint32_t q = j; q < vj.num_qubits(); ++q) map[q] = n + (q - j);
        c.append_mapped(vj, map, "ucg" + std::to_string(j) + "/");
      }
      res.circuit = std::move(c);
      res.decision.m_used = mu;
      res.decision.rationale = "UCG pipeline over copy/phase-register diagonals";
      break;
    }
    case Strategy::Hybrid: {
      res.circuit = hybrid_qsp(req.v, req.m);
      res.decision.t = std::min(t_hybrid, n);
      res.decision.m_used = res.circuit.num_qubits() - n;
      res.decision.rationale = "unary loader + encoding transform prefix";
      break;
    }
    case Strategy::Auto:
      throw Error("unreachable");
  }
  res.report = depth(res.circuit);
  return res;
}

}  // namespace qsprep
