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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsprep/errors.hpp"

namespace qsprep {

/// The whole gate vocabulary. Everything else (Toffoli, SWAP, multi-controls)
/// is macro-expanded into this set by the gadgets module.
enum class GateKind : uint8_t { CNOT, X, H, S, Sdg, Rz, Ry, Phase };

constexpr bool is_rotation(GateKind k) {
  return k == GateKind::Rz || k == GateKind::Ry || k == GateKind::Phase;
}

/// Short lowercase mnemonic used by both emitters: cx,x,h,s,sdg,rz,ry,p.
const char* gate_name(GateKind k);

inline constexpr uint32_t kNoQubit = UINT32_MAX;

struct Gate {
  GateKind kind;
  uint32_t q0;                // target for 1q gates, control for CNOT
  uint32_t q1 = kNoQubit;     // CNOT target
  double angle = 0.0;         // Rz / Ry / Phase only

  bool operator==(const Gate& o) const {
    return kind == o.kind && q0 == o.q0 && q1 == o.q1 && angle == o.angle;
  }
};

enum class RegisterRole : uint8_t { Input, Copy, Phase, Control, Target, Ancilla };

/// Named contiguous qubit range. Registers are bookkeeping only; gate
/// indices are absolute.
struct Register {
  std::string name;
  RegisterRole role;
  uint32_t first = 0;
  uint32_t size = 0;
};

struct StageDepth {
  std::string label;
  uint32_t depth = 0;
  uint64_t size = 0;
};

/// Depth is greedy as-early-as-possible layering: gates on disjoint qubits
/// share a layer, per-qubit order is preserved, no commutation analysis.
/// staged_depth sums the standalone depth of each stage tag, which matches
/// how the constructions count their step structure (stages act as
/// barriers); it equals depth for untagged circuits.
struct DepthReport {
  uint32_t depth = 0;
  uint32_t staged_depth = 0;
  uint64_t size = 0;
  uint64_t cnot_count = 0;
  std::vector<StageDepth> per_stage;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(uint32_t num_qubits) : num_qubits_(num_qubits) {}

  uint32_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  size_t size() const { return gates_.size(); }

  void add(const Gate& g);
  void cnot(uint32_t control, uint32_t target) {
    add({GateKind::CNOT, control, target, 0.0});
  }
  void x(uint32_t q) { add({GateKind::X, q}); }
  void h(uint32_t q) { add({GateKind::H, q}); }
  void s(uint32_t q) { add({GateKind::S, q}); }
  void sdg(uint32_t q) { add({GateKind::Sdg, q}); }
  void rz(double angle, uint32_t q) { add({GateKind::Rz, q, kNoQubit, angle}); }
  void ry(double angle, uint32_t q) { add({GateKind::Ry, q, kNoQubit, angle}); }
  void phase(double angle, uint32_t q) { add({GateKind::Phase, q, kNoQubit, angle}); }

  /// Gates added after this call carry the given stage tag ("" clears it).
  void set_stage(std::string_view label);
  std::string_view stage_label(size_t gate_index) const;
  bool has_stages() const { return stage_names_.size() > 1; }

  void add_register(std::string name, RegisterRole role, uint32_t first, uint32_t size);
  const std::vector<Register>& registers() const { return registers_; }

  /// Append `other` verbatim (same width). Stage tags are kept, optionally
  /// prefixed.
  void append(const Circuit& other, std::string_view stage_prefix = {});
  /// Append with qubit remapping: qubit q of `other` lands on map[q].
  void append_mapped(const Circuit& other, const std::vector<uint32_t>& map,
                     std::string_view stage_prefix = {});

  /// Structural equality on width and gate list (registers and stage tags are
  /// metadata and do not participate).
  bool operator==(const Circuit& o) const {
    return num_qubits_ == o.num_qubits_ && gates_ == o.gates_;
  }

 private:
  uint32_t num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<Register> registers_;
  std::vector<uint16_t> stage_of_;            // parallel to gates_
  std::vector<std::string> stage_names_{""};  // id 0 = untagged
  uint16_t current_stage_ = 0;

  uint16_t intern_stage(std::string_view label);
};

DepthReport depth(const Circuit& c);

/// Reversed gate list with every rotation angle negated and S <-> Sdg;
/// composing c then invert(c) is the identity on every basis state.
Circuit invert(const Circuit& c);

}  // namespace qsprep
