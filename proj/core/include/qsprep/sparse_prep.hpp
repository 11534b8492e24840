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

#include "qsprep/angles.hpp"
#include "qsprep/circuit.hpp"
#include "qsprep/gf2.hpp"

namespace qsprep {

struct SparseTarget {
  uint32_t n = 0;
  /// Distinct basis strings with their amplitudes; unit total norm.
  std::vector<std::pair<BitVector, Cx>> entries;
};

void validate_sparse_target(const SparseTarget& target);

/// |x(i)>|0^{n2}> -> |x(i)>|y(i)> for the list-order bijection x(i) -> y(i);
/// behavior off S1 is unconstrained except that ancillas are restored on
/// every basis input. Circuit layout: input [0,n1), output [n1,n1+n2),
/// ancillas [n1+n2, n1+n2+m). Groups of floor(m/2n1) inputs are processed in
/// parallel on input-register copies; with fewer ancillas the gadget
/// degenerates to sequential multi-controlled writes.
Circuit perm_circuit(const std::vector<BitVector>& s1,
                     const std::vector<BitVector>& s2, uint64_t m);

/// Dense preparation on ceil(log2 s) qubits followed by relocation onto the
/// support (lexicographic-rank bijection). m >= n relocates through an
/// n-wire output register; below that the relocation runs in place as a
/// sequence of basis-state transpositions.
Circuit prepare_sparse(const SparseTarget& target, uint64_t m);

}  // namespace qsprep
