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
#include "qsprep/graycode.hpp"

namespace qsprep {

enum class DiagMode { Ancilla, NoAncilla };

struct DiagPlan {
  uint32_t n = 0;
  uint32_t m_used = 0;  // even in ancilla mode
  DiagMode mode = DiagMode::NoAncilla;
};

/// Ancilla budget actually consumed by synth_diag_ancilla: the largest even
/// value <= min(m, max(2n, 2^n/n)). The upper clamp keeps t < n while still
/// admitting the small-n corner (2n > 2^n/n for n <= 6) the warm-up example
/// lives in. Throws RegimeError when m < 2n.
DiagPlan plan_diag_ancilla(uint32_t n, uint64_t m);

struct DiagOptions {
  /// Emit rotations even when the angle is numerically zero (golden-circuit
  /// mode). Rotations on the all-zero string are never emitted; alpha_0 = 0
  /// by definition.
  bool force_emission = false;
  double zero_angle_threshold = 1e-12;
};

/// Five-stage copy/phase-register construction on n + m_used qubits:
/// |x>|0^m> -> e^{i theta(x)} |x>|0^m> with theta the forward sum of alpha.
/// Stages are tagged "step 01".."step K"; the closing inverse stage replays
/// every CNOT of the first four stages in reverse as one step.
Circuit synth_diag_ancilla(const AlphaVector& alpha, uint32_t n, uint64_t m,
                           const DiagOptions& opts = {});

/// Ancilla-free recursion on exactly n qubits. Stage transitions walk the
/// linearly independent suffix cover; the all-zero-suffix strings recurse on
/// the control register; base cases n <= 2 are direct phase-parity gadgets.
Circuit synth_diag_no_ancilla(const AlphaVector& alpha, uint32_t n,
                              const DiagOptions& opts = {});

/// One transition operator G_k = (Gray path stage) . (generate stage) on
/// r_c + r_t qubits, built standalone for testing.
Circuit build_Gk(int k, const SuffixCover& cover, const FkFamily& fk,
                 const AlphaVector& alpha, const DiagOptions& opts = {});

/// The reset operator R = (T^(ell))^{-1} on the target register.
Circuit build_reset(const SuffixCover& cover);

}  // namespace qsprep
