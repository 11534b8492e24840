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

#include "qsprep/bench.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "qsprep/diag_synth.hpp"
#include "qsprep/prepare.hpp"
#include "qsprep/serialize.hpp"
#include "qsprep/sim.hpp"

namespace qsprep {

namespace {

std::vector<Cx> random_state(std::mt19937_64& rng, uint32_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Cx> v(size_t{1} << n);
  double n2 = 0;
  for (Cx& a : v) {
    a = Cx{g(rng), g(rng)};
    n2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (Cx& a : v) a *= inv;
  return v;
}

PhaseVector random_thetas(std::mt19937_64& rng, uint32_t n) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  PhaseVector pv;
  pv.n = n;
  pv.theta.resize(size_t{1} << n);
  pv.theta[0] = 0;
  for (size_t i = 1; i < pv.theta.size(); ++i) pv.theta[i] = u(rng);
  return pv;
}

bool verify_qsp(const Circuit& c, const std::vector<Cx>& v, uint32_t n) {
  SparseState out = run_sparse(c, SparseState::zero(c.num_qubits()));
  SparseState target(c.num_qubits());
  for (size_t k = 0; k < v.size(); ++k) {
    if (std::abs(v[k]) == 0) continue;
    BasisKey key{std::vector<uint64_t>((c.num_qubits() + 63) / 64, 0)};
    for (uint32_t b = 0; b < n; ++b)
      if ((k >> (n - 1 - b)) & 1) key.flip(b);
    target.set_amplitude(key, v[k]);
  }
  return fidelity(out, target) >= 1.0 - 1e-9;
}

bool verify_diag(const Circuit& c, const PhaseVector& pv, uint32_t n,
                 std::mt19937_64& rng) {
  const PhaseVector ref = pv;
  auto check = [&](uint64_t x) {
    BitVector bits(c.num_qubits());
    for (uint32_t b = 0; b < n; ++b)
      if ((x >> (n - 1 - b)) & 1) bits.set(b, true);
    const PhaseTrack t = run_phase_tracker(c, bits);
    if (!(t.bits == bits)) return false;
    return std::abs(wrap_angle(t.phase - ref.theta[x])) <= 1e-9;
  };
  if (n <= 10) {
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x)
      if (!check(x)) return false;
    return true;
  }
  std::uniform_int_distribution<uint64_t> d(0, (uint64_t{1} << n) - 1);
  for (int i = 0; i < 256; ++i)
    if (!check(d(rng))) return false;
  return true;
}

}  // namespace

std::vector<BenchRow> bench_depth_curve(uint32_t n,
                                        const std::vector<uint64_t>& m_list,
                                        uint32_t trials, uint64_t seed,
                                        BenchKind kind) {
  std::vector<BenchRow> rows;
  for (uint64_t m : m_list) {
    for (uint32_t trial = 0; trial < trials; ++trial) {
      std::mt19937_64 rng(seed * 0x9e3779b9u + m * 1000003u + trial);
      BenchRow row;
      row.n = n;
      row.m = m;
      const auto t0 = std::chrono::steady_clock::now();
      if (kind == BenchKind::Qsp) {
        const std::vector<Cx> v = random_state(rng, n);
        SynthesisRequest req{v, m, Strategy::Auto};
        PrepareResult res = prepare_state(req);
        const auto t1 = std::chrono::steady_clock::now();
        row.regime = strategy_name(res.decision.chosen);
        row.depth = res.report.depth;
        row.size = res.report.size;
        row.cnot_count = res.report.cnot_count;
        row.synth_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.verify_status = verify_qsp(res.circuit, v, n) ? "ok" : "fail";
      } else {
        const PhaseVector pv = random_thetas(rng, n);
        const AlphaVector alpha = alphas_from_thetas(pv);
        Circuit c = m >= 2 * uint64_t{n} ? synth_diag_ancilla(alpha, n, m)
                                         : synth_diag_no_ancilla(alpha, n);
        const auto t1 = std::chrono::steady_clock::now();
        row.regime = m >= 2 * uint64_t{n} ? "diag-ancilla" : "diag-no-ancilla";
        const DepthReport rep = depth(c);
        row.depth = rep.depth;
        row.size = rep.size;
        row.cnot_count = rep.cnot_count;
        row.synth_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.verify_status = verify_diag(c, pv, n, rng) ? "ok" : "fail";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  for (const BenchRow& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += r.regime;
    out += ',';
    out += std::to_string(r.depth);
    out += ',';
    out += std::to_string(r.size);
    out += ',';
    out += std::to_string(r.cnot_count);
    out += ',';
    out += format_double(r.synth_ms);
    out += ',';
    out += r.verify_status;
    out += '\n';
  }
  return out;
}

}  // namespace qsprep
