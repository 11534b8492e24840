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
#include <vector>

namespace qsprep {

inline constexpr const char* kBenchCsvHeader =
    "n,m,regime,depth,size,cnot_count,synth_ms,verify_status";

enum class BenchKind { Qsp, Diag };

struct BenchRow {
  uint32_t n = 0;
  uint64_t m = 0;
  std::string regime;
  uint32_t depth = 0;
  uint64_t size = 0;
  uint64_t cnot_count = 0;
  double synth_ms = 0;
  std::string verify_status;  // "ok" / "fail"
};

/// One row per (m, trial); targets drawn from a generator seeded with
/// (seed, m, trial) so every column except synth_ms is deterministic.
/// Qsp rows synthesize a random state and verify fidelity by sparse
/// simulation; Diag rows synthesize a random diagonal and verify phases by
/// the tracker (exhaustive for n <= 10, 256 sampled basis inputs above).
std::vector<BenchRow> bench_depth_curve(uint32_t n,
                                        const std::vector<uint64_t>& m_list,
                                        uint32_t trials, uint64_t seed,
                                        BenchKind kind = BenchKind::Qsp);

std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace qsprep
