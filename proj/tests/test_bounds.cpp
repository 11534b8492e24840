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

#include <doctest.h>

#include <sstream>

#include "qsprep/bench.hpp"
#include "qsprep/bounds.hpp"

using namespace qsprep;

TEST_CASE("bounds formulas at the pinned points") {
  const BoundsRecord a = bounds(10, 0);
  CHECK(a.qsp_lower == doctest::Approx(102.4));
  const BoundsRecord b = bounds(10, 1024);
  CHECK(b.qsp_lower == doctest::Approx(10.0));
  CHECK(b.qsp_upper_regime == "Theta(n)");
  const BoundsRecord c = bounds(10, 20);
  CHECK(c.qsp_upper_regime == "Theta(2^n/(m+n))");
  CHECK(c.qsp_lower <= c.unitary_upper);
  CHECK(c.unitary_lower <= c.unitary_upper);
}

TEST_CASE("bench csv header is byte exact") {
  CHECK(std::string(kBenchCsvHeader) ==
        "n,m,regime,depth,size,cnot_count,synth_ms,verify_status");
  const auto rows = bench_depth_curve(4, {0, 8}, 1, 7, BenchKind::Qsp);
  const std::string csv = to_csv(rows);
  CHECK(csv.rfind("n,m,regime,depth,size,cnot_count,synth_ms,verify_status\n",
                  0) == 0);
}

namespace {

// All columns except synth_ms.
std::string stable_columns(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  for (const BenchRow& r : rows)
    os << r.n << ',' << r.m << ',' << r.regime << ',' << r.depth << ','
       << r.size << ',' << r.cnot_count << ',' << r.verify_status << '\n';
  return os.str();
}

}  // namespace

TEST_CASE("bench rows are deterministic given a seed") {
  const auto a = bench_depth_curve(5, {0, 10, 20}, 2, 42, BenchKind::Qsp);
  const auto b = bench_depth_curve(5, {0, 10, 20}, 2, 42, BenchKind::Qsp);
  CHECK(stable_columns(a) == stable_columns(b));
  for (const BenchRow& r : a) CHECK(r.verify_status == "ok");
}

TEST_CASE("bench depth column strictly decreases in the budget") {
  const auto rows = bench_depth_curve(10, {0, 20, 40, 100}, 1, 3, BenchKind::Qsp);
  REQUIRE(rows.size() == 4);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].depth < rows[i - 1].depth);
  for (const BenchRow& r : rows) CHECK(r.verify_status == "ok");
}

TEST_CASE("bench diag rows verify by phase oracle") {
  const auto rows = bench_depth_curve(6, {0, 12, 24}, 1, 11, BenchKind::Diag);
  REQUIRE(rows.size() == 3);
  for (const BenchRow& r : rows) CHECK(r.verify_status == "ok");
  CHECK(rows[0].regime == "diag-no-ancilla");
  CHECK(rows[1].regime == "diag-ancilla");
}
