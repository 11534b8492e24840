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

#include "qsprep/sim.hpp"

#include <cmath>
#include <numbers>

#include "qsprep/angles.hpp"

namespace qsprep {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

SparseState::SparseState(uint32_t num_qubits) : n_(num_qubits) {}

SparseState SparseState::zero(uint32_t num_qubits) {
  SparseState s(num_qubits);
  BasisKey k{std::vector<uint64_t>((num_qubits + 63) / 64, 0)};
  s.a_.emplace(std::move(k), Amplitude{1.0, 0.0});
  return s;
}

SparseState SparseState::basis(uint32_t num_qubits, const BitVector& bits) {
  if (bits.size() > num_qubits) throw ValidationError("basis wider than state");
  SparseState s(num_qubits);
  BasisKey k{std::vector<uint64_t>((num_qubits + 63) / 64, 0)};
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits.get(i)) k.flip(static_cast<uint32_t>(i));
  s.a_.emplace(std::move(k), Amplitude{1.0, 0.0});
  return s;
}

double SparseState::norm() const {
  double n2 = 0;
  for (const auto& [k, v] : a_) n2 += std::norm(v);
  return std::sqrt(n2);
}

Amplitude SparseState::amplitude(const BasisKey& k) const {
  auto it = a_.find(k);
  return it == a_.end() ? Amplitude{0, 0} : it->second;
}

Amplitude SparseState::amplitude_prefix(const BitVector& x) const {
  BasisKey k{std::vector<uint64_t>((n_ + 63) / 64, 0)};
  for (size_t i = 0; i < x.size(); ++i)
    if (x.get(i)) k.flip(static_cast<uint32_t>(i));
  return amplitude(k);
}

void SparseState::set_amplitude(const BasisKey& k, Amplitude v) { a_[k] = v; }

SparseState run_sparse(const Circuit& c, const SparseState& init,
                       const RunOptions& opts) {
  if (c.num_qubits() != init.num_qubits())
    throw ValidationError("circuit and state width mismatch");
  SparseState cur = init;
  SparseState::Map next;
  auto check_cap = [&](size_t sz) {
    if (opts.support_cap && sz > opts.support_cap)
      throw SimulationError("sparse support exceeded cap of " +
                            std::to_string(opts.support_cap));
  };
  check_cap(cur.support_size());

  for (const Gate& g : c.gates()) {
    auto& a = cur.amplitudes();
    switch (g.kind) {
      case GateKind::Phase:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::Rz: {
        // Diagonal: keys unchanged, amplitudes scaled in place.
        Amplitude f0{1, 0}, f1{1, 0};
        if (g.kind == GateKind::Phase) {
          f1 = std::polar(1.0, g.angle);
        } else if (g.kind == GateKind::S) {
          f1 = Amplitude{0, 1};
        } else if (g.kind == GateKind::Sdg) {
          f1 = Amplitude{0, -1};
        } else {
          f0 = std::polar(1.0, -g.angle / 2);
          f1 = std::polar(1.0, g.angle / 2);
        }
        for (auto& [k, v] : a) v *= k.get(g.q0) ? f1 : f0;
        break;
      }
      case GateKind::X:
      case GateKind::CNOT: {
        next.clear();
        next.reserve(a.size());
        for (auto& [k, v] : a) {
          BasisKey nk = k;
          if (g.kind == GateKind::X)
            nk.flip(g.q0);
          else if (nk.get(g.q0))
            nk.flip(g.q1);
          next.emplace(std::move(nk), v);
        }
        cur.amplitudes().swap(next);
        break;
      }
      case GateKind::H:
      case GateKind::Ry: {
        next.clear();
        next.reserve(a.size() * 2);
        double c00, c01, c10, c11;  // real 2x2 entries
        if (g.kind == GateKind::H) {
          c00 = c01 = c10 = kInvSqrt2;
          c11 = -kInvSqrt2;
        } else {
          const double ch = std::cos(g.angle / 2), sh = std::sin(g.angle / 2);
          c00 = ch, c01 = -sh, c10 = sh, c11 = ch;
        }
        for (auto& [k, v] : a) {
          const bool b = k.get(g.q0);
          BasisKey flipped = k;
          flipped.flip(g.q0);
          // Column of the 2x2 selected by the current bit value.
          const Amplitude to_same = v * (b ? c11 : c00);
          const Amplitude to_flip = v * (b ? c01 : c10);
          if (to_same != Amplitude{0, 0}) next[k] += to_same;
          if (to_flip != Amplitude{0, 0}) next[std::move(flipped)] += to_flip;
        }
        for (auto it = next.begin(); it != next.end();)
          if (std::abs(it->second) <= opts.prune_threshold)
            it = next.erase(it);
          else
            ++it;
        cur.amplitudes().swap(next);
        break;
      }
    }
    check_cap(cur.support_size());
  }
  return cur;
}

PhaseTrack run_phase_tracker(const Circuit& c, const BitVector& x) {
  if (x.size() != c.num_qubits())
    throw ValidationError("tracker input width mismatch");
  PhaseTrack t{x, 0.0};
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::X:
        t.bits.flip(g.q0);
        break;
      case GateKind::CNOT:
        if (t.bits.get(g.q0)) t.bits.flip(g.q1);
        break;
      case GateKind::Phase:
        if (t.bits.get(g.q0)) t.phase += g.angle;
        break;
      case GateKind::Rz:
        t.phase += t.bits.get(g.q0) ? g.angle / 2 : -g.angle / 2;
        break;
      default:
        throw ValidationError(
            "phase tracker handles only CNOT, X, Phase and Rz gates");
    }
  }
  t.phase = wrap_angle(t.phase);
  return t;
}

double fidelity(const SparseState& a, const SparseState& b) {
  if (a.num_qubits() != b.num_qubits())
    throw ValidationError("fidelity width mismatch");
  const SparseState& small = a.support_size() <= b.support_size() ? a : b;
  const SparseState& large = a.support_size() <= b.support_size() ? b : a;
  Amplitude ip{0, 0};
  for (const auto& [k, v] : small.amplitudes()) {
    Amplitude w = large.amplitude(k);
    // <a|b>: conjugate the a-side amplitude.
    if (&small == &a)
      ip += std::conj(v) * w;
    else
      ip += std::conj(w) * v;
  }
  return std::abs(ip);
}

std::vector<Amplitude> run_dense(const Circuit& c, std::vector<Amplitude> state) {
  const uint32_t n = c.num_qubits();
  if (n > kDenseMaxQubits)
    throw ValidationError("dense engine capped at 24 qubits");
  if (state.size() != (size_t{1} << n))
    throw ValidationError("dense state size mismatch");
  auto bit_of = [n](size_t idx, uint32_t q) -> bool {
    return (idx >> (n - 1 - q)) & 1;
  };
  const size_t dim = state.size();
  for (const Gate& g : c.gates()) {
    const size_t mask0 = size_t{1} << (n - 1 - g.q0);
    switch (g.kind) {
      case GateKind::X: {
        for (size_t i = 0; i < dim; ++i)
          if (!(i & mask0)) std::swap(state[i], state[i | mask0]);
        break;
      }
      case GateKind::CNOT: {
        const size_t mask1 = size_t{1} << (n - 1 - g.q1);
        for (size_t i = 0; i < dim; ++i)
          if ((i & mask0) && !(i & mask1)) std::swap(state[i], state[i | mask1]);
        break;
      }
      case GateKind::Phase:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::Rz: {
        Amplitude f0{1, 0}, f1{1, 0};
        if (g.kind == GateKind::Phase)
          f1 = std::polar(1.0, g.angle);
        else if (g.kind == GateKind::S)
          f1 = Amplitude{0, 1};
        else if (g.kind == GateKind::Sdg)
          f1 = Amplitude{0, -1};
        else {
          f0 = std::polar(1.0, -g.angle / 2);
          f1 = std::polar(1.0, g.angle / 2);
        }
        for (size_t i = 0; i < dim; ++i) state[i] *= bit_of(i, g.q0) ? f1 : f0;
        break;
      }
      case GateKind::H:
      case GateKind::Ry: {
        double c00, c01, c10, c11;
        if (g.kind == GateKind::H) {
          c00 = c01 = c10 = kInvSqrt2;
          c11 = -kInvSqrt2;
        } else {
          const double ch = std::cos(g.angle / 2), sh = std::sin(g.angle / 2);
          c00 = ch, c01 = -sh, c10 = sh, c11 = ch;
        }
        for (size_t i = 0; i < dim; ++i) {
          if (i & mask0) continue;
          const Amplitude a0 = state[i], a1 = state[i | mask0];
          state[i] = c00 * a0 + c01 * a1;
          state[i | mask0] = c10 * a0 + c11 * a1;
        }
        break;
      }
    }
  }
  return state;
}

}  // namespace qsprep
