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
#include <optional>
#include <vector>

#include "qsprep/circuit.hpp"
#include "qsprep/gf2.hpp"

namespace qsprep {

using QubitSet = std::vector<uint32_t>;

/// XOR-copy each source into copies_per_source target qubits (assumed |0>)
/// by a doubling tree: depth <= ceil(log2(copies_per_source+1)), each target
/// is a CNOT target exactly once. Target layout is source-major: target
/// [i*copies_per_source + j] receives copy j of sources[i].
Circuit fanout_copy(const QubitSet& sources, uint32_t copies_per_source,
                    const QubitSet& targets, uint32_t num_qubits);

/// target ^= parity(controls), controls restored; balanced folding gives
/// depth <= 2*ceil(log2 |controls|) + 1. Empty control set yields the
/// identity circuit.
Circuit parity_fanin(const QubitSet& controls, uint32_t target, uint32_t num_qubits);

/// Appends the same fan-in onto an existing circuit.
void append_parity_fanin(Circuit& c, const QubitSet& controls, uint32_t target);

/// |x> -> e^{i alpha <s,x>} |x>. With an ancilla the parity is folded into
/// it and unfolded; without, the pivot is the lowest set bit of s.
Circuit phase_parity(const BitVector& s, double alpha, bool use_ancilla,
                     std::optional<uint32_t> ancilla, uint32_t num_qubits);

/// Multi-controlled X, exact on all basis states, controls and borrowed
/// qubits restored. Uses the borrowed-qubit ladder when |borrowed| >=
/// |controls| - 2 (linear size), otherwise a recursive halving construction
/// (quadratic size, no ancilla needed).
Circuit mcx(const QubitSet& controls, uint32_t target, const QubitSet& borrowed,
            uint32_t num_qubits);
void append_mcx(Circuit& c, const QubitSet& controls, uint32_t target,
                QubitSet borrowed);

/// Standard 6-CNOT Toffoli macro.
void append_toffoli(Circuit& c, uint32_t c0, uint32_t c1, uint32_t target);

/// 3-CNOT swap macro.
void append_swap(Circuit& c, uint32_t a, uint32_t b);

/// CNOT-only circuit realizing |x> -> |Mx> for invertible M over GF(2),
/// synthesized by Gaussian elimination (throws SingularMatrixError).
Circuit cnot_network(const BitMatrix& m);
void append_cnot_network(Circuit& c, const BitMatrix& m,
                         const std::vector<uint32_t>& qubits);

}  // namespace qsprep
