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

#include <string>

#include "qsprep/angles.hpp"
#include "qsprep/circuit.hpp"
#include "qsprep/diag_synth.hpp"

namespace qsprep {

enum class Strategy { Auto, Ucg, Hybrid, NoAncilla };

Strategy strategy_from_label(std::string_view label);
const char* strategy_name(Strategy s);

struct RegimeDecision {
  Strategy chosen = Strategy::NoAncilla;  // never Auto after dispatch
  uint32_t t = 0;                         // hybrid prefix width, else 0
  uint32_t m_used = 0;
  std::string rationale;
};

struct SynthesisRequest {
  std::vector<Cx> v;  // length 2^n, unit norm
  uint64_t m = 0;
  Strategy strategy = Strategy::Auto;
};

struct PrepareResult {
  Circuit circuit;
  RegimeDecision decision;
  DepthReport report;
};

/// Compile |0...0> -> sum_k v_k |k> (x) |0^m_used>. Auto dispatch: m < 2n
/// uses the ancilla-free construction, large budgets switch to the unary
/// loader + encoding transform hybrid, anything between runs the UCG
/// pipeline over the copy/phase-register diagonals.
PrepareResult prepare_state(const SynthesisRequest& req);

/// Ancilla width a level-j UCG will consume from budget m.
uint32_t ucg_ancilla_width(uint32_t j, uint64_t m);

/// One uniformly controlled gate V_j on qubits 0..j-1 (target j-1) plus
/// ancillas, exact as a unitary including global phase.
Circuit ucg_circuit(const std::vector<Mat2>& level, uint32_t j, uint64_t m);

/// Unary-encoded loader: 2^t wires, |0...0> -> sum_k v_k |e_k>; X on wire 0
/// then a binary-splitting cascade of controlled-Ry + CNOT pairs, one phase
/// layer at the end for complex amplitudes. Depth O(t).
Circuit unary_qsp(const std::vector<Cx>& v);

/// |e_i>|0...> -> |i>|0...> on 3 * 2^t qubits (binary lands on the first t
/// wires); unary -> two-register unary -> per-half binary, ancillas
/// restored, depth O(t).
Circuit encoding_transform(uint32_t t);

/// Prefix state via unary loader + encoding transform with
/// t = floor(log2(m/3)), then UCGs V_{t+1}..V_n.
Circuit hybrid_qsp(const std::vector<Cx>& v, uint64_t m);

/// e^{i g} realized as Rz(-2g) then Phase(2g) on one qubit.
void append_global_phase(Circuit& c, double g, uint32_t qubit);

}  // namespace qsprep
