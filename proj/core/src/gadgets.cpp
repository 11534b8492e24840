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

#include "qsprep/gadgets.hpp"

#include <algorithm>
#include <numbers>
#include <set>

namespace qsprep {

namespace {
constexpr double kPi = std::numbers::pi;
}

Circuit fanout_copy(const QubitSet& sources, uint32_t copies_per_source,
                    const QubitSet& targets, uint32_t num_qubits) {
  if (targets.size() != sources.size() * size_t{copies_per_source})
    throw ValidationError("fanout_copy: |targets| != |sources| * copies");
  std::set<uint32_t> src(sources.begin(), sources.end());
  for (uint32_t t : targets)
    if (src.count(t)) throw ValidationError("fanout_copy: targets overlap sources");
  std::set<uint32_t> tgt(targets.begin(), targets.end());
  if (tgt.size() != targets.size())
    throw ValidationError("fanout_copy: duplicate targets");

  Circuit c(num_qubits);
  // Per source: available holds the source plus every finished copy; each
  // round pairs available qubits with pending targets, doubling per round.
  std::vector<std::vector<uint32_t>> avail(sources.size());
  std::vector<uint32_t> next(sources.size(), 0);
  for (size_t i = 0; i < sources.size(); ++i) avail[i] = {sources[i]};
  bool work = copies_per_source > 0;
  while (work) {
    work = false;
    std::vector<std::vector<uint32_t>> fresh(sources.size());
    for (size_t i = 0; i < sources.size(); ++i) {
      const uint32_t have = static_cast<uint32_t>(avail[i].size());
      for (uint32_t r = 0; r < have && next[i] < copies_per_source; ++r) {
        const uint32_t t = targets[i * copies_per_source + next[i]];
        c.cnot(avail[i][r], t);
        fresh[i].push_back(t);
        ++next[i];
      }
      if (next[i] < copies_per_source) work = true;
    }
    for (size_t i = 0; i < sources.size(); ++i)
      avail[i].insert(avail[i].end(), fresh[i].begin(), fresh[i].end());
  }
  return c;
}

void append_parity_fanin(Circuit& c, const QubitSet& controls, uint32_t target) {
  for (uint32_t q : controls)
    if (q == target) throw ValidationError("parity_fanin: target among controls");
  if (controls.empty()) return;
  if (controls.size() == 1) {
    c.cnot(controls[0], target);
    return;
  }
  // Fold pairwise into the odd positions, XOR the survivor into the target,
  // then unfold. Each fold round is one parallel layer.
  std::vector<std::pair<uint32_t, uint32_t>> folds;
  std::vector<uint32_t> live(controls);
  while (live.size() > 1) {
    std::vector<uint32_t> nxt;
    size_t i = 0;
    for (; i + 1 < live.size(); i += 2) {
      folds.emplace_back(live[i], live[i + 1]);
      c.cnot(live[i], live[i + 1]);
      nxt.push_back(live[i + 1]);
    }
    if (i < live.size()) nxt.push_back(live[i]);
    live = std::move(nxt);
  }
  c.cnot(live[0], target);
  for (auto it = folds.rbegin(); it != folds.rend(); ++it) c.cnot(it->first, it->second);
}

Circuit parity_fanin(const QubitSet& controls, uint32_t target, uint32_t num_qubits) {
  Circuit c(num_qubits);
  append_parity_fanin(c, controls, target);
  return c;
}

Circuit phase_parity(const BitVector& s, double alpha, bool use_ancilla,
                     std::optional<uint32_t> ancilla, uint32_t num_qubits) {
  if (!s.any())
    throw ValidationError("phase_parity: all-zero mask is a global phase");
  QubitSet set_bits;
  for (size_t i = 0; i < s.size(); ++i)
    if (s.get(i)) set_bits.push_back(static_cast<uint32_t>(i));
  Circuit c(num_qubits);
  if (use_ancilla) {
    if (!ancilla) throw ValidationError("phase_parity: ancilla index required");
    append_parity_fanin(c, set_bits, *ancilla);
    c.phase(alpha, *ancilla);
    append_parity_fanin(c, set_bits, *ancilla);
  } else {
    const uint32_t pivot = set_bits.front();  // lowest set bit of s
    QubitSet rest(set_bits.begin() + 1, set_bits.end());
    append_parity_fanin(c, rest, pivot);
    c.phase(alpha, pivot);
    append_parity_fanin(c, rest, pivot);
  }
  return c;
}

void append_toffoli(Circuit& c, uint32_t a, uint32_t b, uint32_t t) {
  const double T = kPi / 4;
  c.h(t);
  c.cnot(b, t);
  c.phase(-T, t);
  c.cnot(a, t);
  c.phase(T, t);
  c.cnot(b, t);
  c.phase(-T, t);
  c.cnot(a, t);
  c.phase(T, b);
  c.phase(T, t);
  c.h(t);
  c.cnot(a, b);
  c.phase(T, a);
  c.phase(-T, b);
  c.cnot(a, b);
}

void append_swap(Circuit& c, uint32_t a, uint32_t b) {
  c.cnot(a, b);
  c.cnot(b, a);
  c.cnot(a, b);
}

namespace {

// Controlled X^alpha (alpha in units of pi would be ambiguous; `exponent`
// means X^exponent): C(X^e) = (I (x) H) . C(Phase(pi e)) . (I (x) H).
void append_cxpow(Circuit& c, uint32_t ctrl, uint32_t t, double exponent) {
  const double beta = kPi * exponent;
  c.h(t);
  c.phase(beta / 2, ctrl);
  c.phase(beta / 2, t);
  c.cnot(ctrl, t);
  c.phase(-beta / 2, t);
  c.cnot(ctrl, t);
  c.h(t);
}

void mcx_impl(Circuit& c, const QubitSet& controls, uint32_t target,
              const QubitSet& borrowed);

// Borrowed-qubit ladder (4(k-2) Toffolis); needs k-2 borrowed qubits.
void mcx_ladder(Circuit& c, const QubitSet& ct, uint32_t t, const QubitSet& br) {
  const size_t k = ct.size();
  auto half_pass = [&](bool with_top) {
    if (with_top) append_toffoli(c, ct[k - 1], br[k - 3], t);
    for (size_t j = k - 1; j >= 3; --j)
      append_toffoli(c, ct[j - 1], br[j - 3], br[j - 2]);
    append_toffoli(c, ct[0], ct[1], br[0]);
    for (size_t j = 3; j <= k - 1; ++j)
      append_toffoli(c, ct[j - 1], br[j - 3], br[j - 2]);
  };
  half_pass(true);
  append_toffoli(c, ct[k - 1], br[k - 3], t);
  half_pass(false);
}

// Multi-controlled X^exponent via the halving recursion.
void append_mcxpow(Circuit& c, const QubitSet& ct, uint32_t t, double exponent) {
  if (ct.empty()) throw ValidationError("mcxpow needs at least one control");
  if (ct.size() == 1) {
    append_cxpow(c, ct[0], t, exponent);
    return;
  }
  const uint32_t last = ct.back();
  QubitSet head(ct.begin(), ct.end() - 1);
  append_cxpow(c, last, t, exponent / 2);
  mcx_impl(c, head, last, {t});
  append_cxpow(c, last, t, -exponent / 2);
  mcx_impl(c, head, last, {t});
  append_mcxpow(c, head, t, exponent / 2);
}

void mcx_impl(Circuit& c, const QubitSet& ct, uint32_t t, const QubitSet& br) {
  const size_t k = ct.size();
  if (k == 0) {
    c.x(t);
    return;
  }
  if (k == 1) {
    c.cnot(ct[0], t);
    return;
  }
  if (k == 2) {
    append_toffoli(c, ct[0], ct[1], t);
    return;
  }
  if (br.size() >= k - 2) {
    mcx_ladder(c, ct, t, br);
    return;
  }
  if (!br.empty()) {
    // Split through one borrowed qubit; each half borrows the other.
    const uint32_t w = br[0];
    const size_t m1 = (k + 1) / 2;
    QubitSet a(ct.begin(), ct.begin() + m1);
    QubitSet d(ct.begin() + m1, ct.end());
    QubitSet d_plus = d;
    d_plus.push_back(w);
    QubitSet borrow_a = d;
    borrow_a.push_back(t);
    borrow_a.insert(borrow_a.end(), br.begin() + 1, br.end());
    QubitSet borrow_d = a;
    borrow_d.insert(borrow_d.end(), br.begin() + 1, br.end());
    mcx_impl(c, a, w, borrow_a);
    mcx_impl(c, d_plus, t, borrow_d);
    mcx_impl(c, a, w, borrow_a);
    mcx_impl(c, d_plus, t, borrow_d);
    return;
  }
  // No spare wire at all: peel one control with controlled square roots.
  const uint32_t last = ct.back();
  QubitSet head(ct.begin(), ct.end() - 1);
  append_cxpow(c, last, t, 0.5);
  mcx_impl(c, head, last, {t});
  append_cxpow(c, last, t, -0.5);
  mcx_impl(c, head, last, {t});
  append_mcxpow(c, head, t, 0.5);
}

}  // namespace

void append_mcx(Circuit& c, const QubitSet& controls, uint32_t target,
                QubitSet borrowed) {
  std::set<uint32_t> seen(controls.begin(), controls.end());
  seen.insert(target);
  if (seen.size() != controls.size() + 1)
    throw ValidationError("mcx: controls and target must be distinct");
  for (uint32_t b : borrowed)
    if (seen.count(b)) throw ValidationError("mcx: borrowed qubit not disjoint");
  mcx_impl(c, controls, target, borrowed);
}

Circuit mcx(const QubitSet& controls, uint32_t target, const QubitSet& borrowed,
            uint32_t num_qubits) {
  Circuit c(num_qubits);
  append_mcx(c, controls, target, borrowed);
  return c;
}

void append_cnot_network(Circuit& c, const BitMatrix& m,
                         const std::vector<uint32_t>& qubits) {
  if (m.rows() != m.cols()) throw ValidationError("cnot_network: matrix not square");
  if (qubits.size() != m.rows()) throw ValidationError("cnot_network: qubit count");
  const size_t n = m.rows();
  BitMatrix a = m;
  // Record row operations row[t] ^= row[c] reducing M to I; emitting them in
  // reverse order as CNOT(c, t) realizes |x> -> |Mx>.
  std::vector<std::pair<size_t, size_t>> ops;  // (target_row, control_row)
  for (size_t col = 0; col < n; ++col) {
    if (!a.get(col, col)) {
      size_t pivot = col + 1;
      while (pivot < n && !a.get(pivot, col)) ++pivot;
      if (pivot == n) throw SingularMatrixError("cnot_network: singular map");
      a.row_xor(col, pivot);
      ops.emplace_back(col, pivot);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r != col && a.get(r, col)) {
        a.row_xor(r, col);
        ops.emplace_back(r, col);
      }
    }
  }
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    c.cnot(qubits[it->second], qubits[it->first]);
}

Circuit cnot_network(const BitMatrix& m) {
  Circuit c(static_cast<uint32_t>(m.rows()));
  std::vector<uint32_t> id(m.rows());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<uint32_t>(i);
  append_cnot_network(c, m, id);
  return c;
}

}  // namespace qsprep
