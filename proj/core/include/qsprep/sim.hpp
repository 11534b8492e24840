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

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qsprep/circuit.hpp"
#include "qsprep/gf2.hpp"

namespace qsprep {

using Amplitude = std::complex<double>;

/// Basis bitstring of arbitrary width, packed into words. Qubit q lives at
/// word q/64, bit q%64.
struct BasisKey {
  std::vector<uint64_t> w;
  bool operator==(const BasisKey& o) const { return w == o.w; }
  bool get(uint32_t q) const { return (w[q >> 6] >> (q & 63)) & 1; }
  void flip(uint32_t q) { w[q >> 6] ^= uint64_t{1} << (q & 63); }
};

struct BasisKeyHash {
  size_t operator()(const BasisKey& k) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t x : k.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<size_t>(h);
  }
};

/// Finitely supported statevector: map from basis bitstrings to amplitudes.
class SparseState {
 public:
  using Map = std::unordered_map<BasisKey, Amplitude, BasisKeyHash>;

  explicit SparseState(uint32_t num_qubits);
  static SparseState zero(uint32_t num_qubits);
  static SparseState basis(uint32_t num_qubits, const BitVector& bits);

  uint32_t num_qubits() const { return n_; }
  size_t support_size() const { return a_.size(); }
  double norm() const;
  Amplitude amplitude(const BasisKey& k) const;
  /// Amplitude of |x> x |0...0>: x gives the first x.size() qubits, rest 0.
  Amplitude amplitude_prefix(const BitVector& x) const;
  void set_amplitude(const BasisKey& k, Amplitude v);

  const Map& amplitudes() const { return a_; }
  Map& amplitudes() { return a_; }

 private:
  uint32_t n_;
  Map a_;
};

struct RunOptions {
  double prune_threshold = 1e-14;
  /// 0 disables the cap; otherwise SimulationError once the support exceeds
  /// it at any point of the run.
  size_t support_cap = 0;
};

SparseState run_sparse(const Circuit& c, const SparseState& init,
                       const RunOptions& opts = {});

/// Classical bits plus an accumulated phase; exact for circuits restricted
/// to {CNOT, X, Phase, Rz}. Any other gate kind is an error.
struct PhaseTrack {
  BitVector bits;
  double phase = 0.0;  // normalized into (-pi, pi]
};

PhaseTrack run_phase_tracker(const Circuit& c, const BitVector& x);

/// |<a|b>|, global-phase invariant.
double fidelity(const SparseState& a, const SparseState& b);

inline constexpr uint32_t kDenseMaxQubits = 24;

/// Dense reference engine for tiny widths (<= kDenseMaxQubits). Index bit
/// convention matches BitVector::to_index: qubit 0 is the most significant
/// index bit.
std::vector<Amplitude> run_dense(const Circuit& c, std::vector<Amplitude> state);


}  // namespace qsprep
