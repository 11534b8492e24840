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

#include <benchmark/benchmark.h>

#include <random>

#include "qsprep/angles.hpp"
#include "qsprep/diag_synth.hpp"
#include "qsprep/gadgets.hpp"
#include "qsprep/prepare.hpp"

namespace {

using namespace qsprep;

std::vector<Cx> random_state(std::mt19937_64& rng, uint32_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Cx> v(size_t{1} << n);
  double n2 = 0;
  for (Cx& a : v) {
    a = Cx{g(rng), g(rng)};
    n2 += std::norm(a);
  }
  for (Cx& a : v) a /= std::sqrt(n2);
  return v;
}

void BM_Fwht(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> a(size_t{1} << n);
  for (double& x : a) x = u(rng);
  for (auto _ : state) {
    std::vector<double> w = a;
    fwht(w);
    benchmark::DoNotOptimize(w);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fwht)->DenseRange(10, 18, 2);

void BM_DiagAncilla(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  const uint64_t m = static_cast<uint64_t>(state.range(1));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3, 3);
  PhaseVector pv;
  pv.n = n;
  pv.theta.assign(size_t{1} << n, 0.0);
  for (size_t i = 1; i < pv.theta.size(); ++i) pv.theta[i] = u(rng);
  const AlphaVector alpha = alphas_from_thetas(pv);
  for (auto _ : state) {
    Circuit c = synth_diag_ancilla(alpha, n, m);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_DiagAncilla)->Args({12, 24})->Args({12, 96})->Args({14, 128});

void BM_DiagNoAncilla(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  PhaseVector pv;
  pv.n = n;
  pv.theta.assign(size_t{1} << n, 0.0);
  for (size_t i = 1; i < pv.theta.size(); ++i) pv.theta[i] = u(rng);
  const AlphaVector alpha = alphas_from_thetas(pv);
  for (auto _ : state) {
    Circuit c = synth_diag_no_ancilla(alpha, n);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_DiagNoAncilla)->DenseRange(8, 14, 2);

void BM_PrepareState(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  const uint64_t m = static_cast<uint64_t>(state.range(1));
  std::mt19937_64 rng(4);
  const std::vector<Cx> v = random_state(rng, n);
  for (auto _ : state) {
    SynthesisRequest req{v, m, Strategy::Auto};
    PrepareResult res = prepare_state(req);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_PrepareState)
    ->Args({8, 0})
    ->Args({10, 0})
    ->Args({10, 40})
    ->Args({10, 3072});

void BM_CnotNetwork(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(5);
  BitMatrix m(n, n);
  do {
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1);
  } while (!is_invertible(m));
  for (auto _ : state) {
    Circuit c = cnot_network(m);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CnotNetwork)->DenseRange(8, 64, 8);

}  // namespace

BENCHMARK_MAIN();
