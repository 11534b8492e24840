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

#include "qsprep/sparse_prep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qsprep/gadgets.hpp"
#include "qsprep/prepare.hpp"

namespace qsprep {

void validate_sparse_target(const SparseTarget& target) {
  if (target.entries.empty())
    throw ValidationError("sparse target needs at least one entry");
  double n2 = 0;
  std::set<std::string> seen;
  for (const auto& [bits, amp] : target.entries) {
    if (bits.size() != target.n)
      throw ValidationError("sparse entry width mismatch");
    if (!seen.insert(bits.to_string()).second)
      throw ValidationError("sparse target indices must be distinct");
    n2 += std::norm(amp);
  }
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-10)
    throw ValidationError("sparse target must have unit norm");
}

namespace {

// Write the bits of y(i) into out_wires conditioned on in_wires holding
// x(i), for every listed pair; ancillas in `anc` are |0> and restored.
void append_perm_writes(Circuit& c, const std::vector<BitVector>& s1,
                        const std::vector<BitVector>& s2,
                        const std::vector<uint32_t>& in_wires,
                        const std::vector<uint32_t>& out_wires,
                        const std::vector<uint32_t>& anc) {
  const size_t s = s1.size();
  const uint32_t n1 = static_cast<uint32_t>(in_wires.size());
  const uint32_t n2 = static_cast<uint32_t>(out_wires.size());
  const size_t group = n1 ? anc.size() / (2 * size_t{n1}) : 0;

  auto conj_x = [&](const std::vector<uint32_t>& wires, const BitVector& pat) {
    for (uint32_t b = 0; b < n1; ++b)
      if (!pat.get(b)) c.x(wires[b]);
  };

  if (group <= 1) {
    // Sequential multi-controlled writes; spare ancillas serve as borrowed
    // qubits to keep the MCX linear when available.
    QubitSet borrowed(anc.begin(), anc.end());
    for (size_t i = 0; i < s; ++i) {
      for (uint32_t j = 0; j < n2; ++j) {
        if (!s2[i].get(j)) continue;
        conj_x(in_wires, s1[i]);
        append_mcx(c, in_wires, out_wires[j], borrowed);
        conj_x(in_wires, s1[i]);
      }
    }
    return;
  }

  // Batched: `group` copies of the input register plus one partial bit per
  // group member; whatever ancillas remain serve as borrows for the
  // multi-controlled writes.
  std::vector<std::vector<uint32_t>> copy_sets(group);
  std::vector<uint32_t> partials(group);
  QubitSet leftover;
  {
    size_t a = 0;
    for (size_t r = 0; r < group; ++r) {
      copy_sets[r].resize(n1);
      for (uint32_t b = 0; b < n1; ++b) copy_sets[r][b] = anc[a++];
    }
    for (size_t r = 0; r < group; ++r) partials[r] = anc[a++];
    leftover.assign(anc.begin() + a, anc.end());
  }
  std::vector<uint32_t> copy_targets(group * n1);
  for (size_t r = 0; r < group; ++r)
    for (uint32_t b = 0; b < n1; ++b)
      copy_targets[b * group + r] = copy_sets[r][b];
  const Circuit copies =
      fanout_copy(in_wires, static_cast<uint32_t>(group), copy_targets,
                  c.num_qubits());
  c.append(copies);
  for (uint32_t j = 0; j < n2; ++j) {
    for (size_t base = 0; base < s; base += group) {
      const size_t batch = std::min(group, s - base);
      QubitSet hot;
      auto mark_batch = [&]() {
        for (size_t r = 0; r < batch; ++r) {
          const size_t i = base + r;
          if (!s2[i].get(j)) continue;
          conj_x(copy_sets[r], s1[i]);
          append_mcx(c, copy_sets[r], partials[r], leftover);
          conj_x(copy_sets[r], s1[i]);
        }
      };
      for (size_t r = 0; r < batch; ++r)
        if (s2[base + r].get(j)) hot.push_back(partials[r]);
      if (hot.empty()) continue;
      mark_batch();
      append_parity_fanin(c, hot, out_wires[j]);
      mark_batch();  // restore the partial bits
    }
  }
  c.append(invert(copies));
}

}  // namespace

Circuit perm_circuit(const std::vector<BitVector>& s1,
                     const std::vector<BitVector>& s2, uint64_t m) {
  if (s1.empty() || s1.size() != s2.size())
    throw ValidationError("perm_circuit needs equally sized nonempty lists");
  const uint32_t n1 = static_cast<uint32_t>(s1[0].size());
  const uint32_t n2 = static_cast<uint32_t>(s2[0].size());
  std::set<std::string> a, b;
  for (const auto& v : s1) {
    if (v.size() != n1) throw ValidationError("perm_circuit: ragged S1");
    if (!a.insert(v.to_string()).second)
      throw ValidationError("perm_circuit: duplicate strings in S1");
  }
  for (const auto& v : s2) {
    if (v.size() != n2) throw ValidationError("perm_circuit: ragged S2");
    if (!b.insert(v.to_string()).second)
      throw ValidationError("perm_circuit: duplicate strings in S2");
  }
  Circuit c(n1 + n2 + static_cast<uint32_t>(m));
  c.add_register("input", RegisterRole::Input, 0, n1);
  c.add_register("output", RegisterRole::Target, n1, n2);
  if (m > 0)
    c.add_register("ancilla", RegisterRole::Ancilla, n1 + n2,
                   static_cast<uint32_t>(m));
  std::vector<uint32_t> in(n1), out(n2), anc(m);
  for (uint32_t q = 0; q < n1; ++q) in[q] = q;
  for (uint32_t q = 0; q < n2; ++q) out[q] = n1 + q;
  for (uint32_t q = 0; q < m; ++q) anc[q] = n1 + n2 + q;
  append_perm_writes(c, s1, s2, in, out, anc);
  return c;
}

namespace {

// Swap basis states u <-> w on the wires listed in `reg`, fixing every
// string in `live_others`: CNOT-conjugation collapses the difference set to
// one pivot bit, then a multi-controlled X swaps the pair. The controls are
// only the bits needed to separate the pair from the live strings (the rest
// of the space may move, nothing rides on it), and every unused wire serves
// as a dirty borrow so the linear Toffoli ladder applies.
void append_transposition(Circuit& c, BitVector u, BitVector w,
                          const std::vector<BitVector>& live_others,
                          const std::vector<uint32_t>& reg,
                          const QubitSet& spare) {
  std::vector<uint32_t> diff;
  for (size_t b = 0; b < u.size(); ++b)
    if (u.get(b) != w.get(b)) diff.push_back(static_cast<uint32_t>(b));
  if (diff.empty()) return;
  const uint32_t d = diff[0];
  if (!w.get(d)) std::swap(u, w);  // make the flipped side the w-label
  auto conj_image = [&](BitVector z) {
    if (z.get(d))
      for (size_t i = 1; i < diff.size(); ++i) z.flip(diff[i]);
    return z;
  };
  const BitVector pattern = conj_image(u);  // also the image of w, off d
  std::vector<BitVector> others;
  for (const BitVector& o : live_others) others.push_back(conj_image(o));

  // Grow the control set until no live image matches the pattern on it.
  std::vector<bool> in_ctl(u.size(), false);
  std::vector<size_t> matching;
  for (size_t i = 0; i < others.size(); ++i) matching.push_back(i);
  while (true) {
    std::vector<size_t> still;
    for (size_t i : matching) {
      bool match = true;
      for (size_t b = 0; b < u.size() && match; ++b)
        if (in_ctl[b] && others[i].get(b) != pattern.get(b)) match = false;
      if (match) still.push_back(i);
    }
    matching = std::move(still);
    if (matching.empty()) break;
    size_t best_bit = u.size();
    size_t best_gain = 0;
    for (size_t b = 0; b < u.size(); ++b) {
      if (b == d || in_ctl[b]) continue;
      size_t gain = 0;
      for (size_t i : matching) gain += others[i].get(b) != pattern.get(b);
      if (gain > best_gain) {
        best_gain = gain;
        best_bit = b;
      }
    }
    if (best_bit == u.size())
      throw Error("transposition: live strings are not separable");
    in_ctl[best_bit] = true;
  }

  QubitSet controls;
  std::vector<uint32_t> zeros;
  QubitSet borrowed = spare;
  for (size_t b = 0; b < u.size(); ++b) {
    if (b == d) continue;
    if (in_ctl[b]) {
      controls.push_back(reg[b]);
      if (!pattern.get(b)) zeros.push_back(reg[b]);
    } else {
      borrowed.push_back(reg[b]);  // dirty borrow, restored by the ladder
    }
  }
  for (size_t i = 1; i < diff.size(); ++i) c.cnot(reg[d], reg[diff[i]]);
  for (uint32_t q : zeros) c.x(q);
  append_mcx(c, controls, reg[d], borrowed);
  for (uint32_t q : zeros) c.x(q);
  for (size_t i = diff.size(); i-- > 1;) c.cnot(reg[d], reg[diff[i]]);
}

}  // namespace

Circuit prepare_sparse(const SparseTarget& target, uint64_t m) {
  validate_sparse_target(target);
  const uint32_t n = target.n;
  auto entries = target.entries;
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const size_t s = entries.size();

  if (s == 1) {
    Circuit c(n + 0);
    c.add_register("input", RegisterRole::Input, 0, n);
    for (uint32_t b = 0; b < n; ++b)
      if (entries[0].first.get(b)) c.x(b);
    append_global_phase(c, std::arg(entries[0].second), 0);
    return c;
  }

  uint32_t np = 0;
  while ((size_t{1} << np) < s) ++np;
  std::vector<Cx> dense(size_t{1} << np, Cx{0, 0});
  for (size_t i = 0; i < s; ++i) dense[i] = entries[i].second;
  std::vector<BitVector> xs(s), ys(s);
  for (size_t i = 0; i < s; ++i) {
    xs[i] = BitVector::from_index(i, np);
    ys[i] = entries[i].first;
  }

  if (m >= n) {
    // Relocate through an n-wire output register:
    // |x 0>|0^n> -> |x 0>|y> -> |0^n>|y> -> |y>|0^n>.
    const uint32_t width = n + static_cast<uint32_t>(m);
    Circuit c(width);
    c.add_register("input", RegisterRole::Input, 0, n);
    c.add_register("ancilla", RegisterRole::Ancilla, n, static_cast<uint32_t>(m));
    SynthesisRequest prep;
    prep.v = dense;
    prep.m = 0;
    prep.strategy = Strategy::NoAncilla;
    const PrepareResult pr = prepare_state(prep);
    {
      std::vector<uint32_t> map(np);
      for (uint32_t q = 0; q < np; ++q) map[q] = q;
      c.append_mapped(pr.circuit, map, "dense/");
    }
    std::vector<uint32_t> in(np), out(n), scratch;
    for (uint32_t q = 0; q < np; ++q) in[q] = q;
    for (uint32_t q = 0; q < n; ++q) out[q] = n + q;
    for (uint32_t q = 2 * n; q < width; ++q) scratch.push_back(q);
    c.set_stage("write");
    append_perm_writes(c, xs, ys, in, out, scratch);
    c.set_stage("erase");
    // Uncompute x from y; only the first np wires ever hold ones.
    std::vector<BitVector> x_as_targets(s);
    for (size_t i = 0; i < s; ++i) x_as_targets[i] = xs[i];
    append_perm_writes(c, ys, x_as_targets, out, in, scratch);
    c.set_stage("relocate");
    for (uint32_t q = 0; q < n; ++q) {
      c.cnot(n + q, q);
      c.cnot(q, n + q);
    }
    c.set_stage("");
    return c;
  }

  // In-place relocation: dense prep on the first np wires, then one
  // basis-state transposition per support element.
  const uint32_t width = n + static_cast<uint32_t>(m);
  Circuit c(width);
  c.add_register("input", RegisterRole::Input, 0, n);
  if (m > 0)
    c.add_register("ancilla", RegisterRole::Ancilla, n, static_cast<uint32_t>(m));
  SynthesisRequest prep;
  prep.v = dense;
  prep.m = 0;
  prep.strategy = Strategy::NoAncilla;
  const PrepareResult pr = prepare_state(prep);
  {
    std::vector<uint32_t> map(np);
    for (uint32_t q = 0; q < np; ++q) map[q] = q;
    c.append_mapped(pr.circuit, map, "dense/");
  }
  std::vector<uint32_t> reg(n);
  for (uint32_t q = 0; q < n; ++q) reg[q] = q;
  QubitSet borrowed;
  for (uint32_t q = n; q < width; ++q) borrowed.push_back(q);
  std::vector<BitVector> cur(s);
  for (size_t i = 0; i < s; ++i) {
    BitVector padded(n);
    for (uint32_t b = 0; b < np; ++b)
      if (xs[i].get(b)) padded.set(b, true);
    cur[i] = std::move(padded);
  }
  c.set_stage("relocate");
  for (size_t i = 0; i < s; ++i) {
    if (cur[i] == ys[i]) continue;
    // An amplitude already sitting at the destination rides the swap back
    // to cur[i]; everything else must stay fixed.
    std::vector<BitVector> live_others;
    for (size_t j = 0; j < s; ++j)
      if (j != i && !(cur[j] == ys[i])) live_others.push_back(cur[j]);
    append_transposition(c, cur[i], ys[i], live_others, reg, borrowed);
    for (size_t j = i + 1; j < s; ++j)
      if (cur[j] == ys[i]) cur[j] = cur[i];
    cur[i] = ys[i];
  }
  c.set_stage("");
  return c;
}

}  // namespace qsprep
