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

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsprep/bench.hpp"
#include "qsprep/bounds.hpp"
#include "qsprep/diag_synth.hpp"
#include "qsprep/prepare.hpp"
#include "qsprep/serialize.hpp"
#include "qsprep/sim.hpp"
#include "qsprep/sparse_prep.hpp"

namespace {

using namespace qsprep;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitRegime = 3;
constexpr int kExitVerify = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << text;
}

std::vector<Cx> load_state(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(slurp(path));
  if (!j.is_array() || j.empty())
    throw ValidationError("state file must be a JSON array of [re, im] pairs");
  std::vector<Cx> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw ValidationError("state entries must be [re, im] pairs");
    v.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

PhaseVector load_thetas(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(slurp(path));
  if (!j.is_array() || j.empty())
    throw ValidationError("theta file must be a JSON array of reals");
  PhaseVector pv;
  pv.theta.reserve(j.size());
  for (const auto& e : j) pv.theta.push_back(e.get<double>());
  uint32_t n = 0;
  while ((size_t{1} << n) < pv.theta.size()) ++n;
  if ((size_t{1} << n) != pv.theta.size())
    throw ValidationError("theta file length must be a power of 2");
  if (pv.theta[0] != 0.0)
    throw ValidationError("theta file must start with 0");
  pv.n = n;
  return pv;
}

SparseTarget load_sparse(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(slurp(path));
  if (!j.is_array() || j.empty())
    throw ValidationError("sparse file must be a JSON array of "
                          "[\"bits\", re, im] triples");
  SparseTarget t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string())
      throw ValidationError("sparse entries must be [\"bits\", re, im]");
    BitVector bits = BitVector::from_string(e[0].get<std::string>());
    if (t.entries.empty()) t.n = static_cast<uint32_t>(bits.size());
    t.entries.emplace_back(std::move(bits),
                           Cx{e[1].get<double>(), e[2].get<double>()});
  }
  validate_sparse_target(t);
  return t;
}

std::string render(const Circuit& c, const std::string& format) {
  const EmitFormat f = format_from_label(format);
  std::string text = emit(c, f);
  if (f == EmitFormat::QasmText) {
    std::string header = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                         std::to_string(c.num_qubits()) + "];\n";
    text = header + text;
  }
  return text;
}

void write_or_print(const Circuit& c, const std::string& out,
                    const std::string& format) {
  const std::string text = render(c, format);
  if (out.empty())
    std::cout << text;
  else
    spit(out, text);
}

void print_stage_table(const Circuit& c) {
  const DepthReport r = depth(c);
  std::cout << "stage,depth,size\n";
  for (const auto& s : r.per_stage)
    std::cout << s.label << ',' << s.depth << ',' << s.size << '\n';
  std::cout << "total (staged)," << r.staged_depth << ',' << r.size << '\n';
  std::cout << "total (asap)," << r.depth << ',' << r.size << '\n';
}

int cmd_synth(const std::string& state_file, const std::string& sparse_file,
              uint64_t m, const std::string& strategy, const std::string& out,
              const std::string& format, bool trace) {
  Circuit circuit;
  if (!sparse_file.empty()) {
    circuit = prepare_sparse(load_sparse(sparse_file), m);
  } else {
    SynthesisRequest req;
    req.v = load_state(state_file);
    req.m = m;
    req.strategy = strategy_from_label(strategy);
    PrepareResult res = prepare_state(req);
    std::cerr << "strategy: " << strategy_name(res.decision.chosen)
              << "  ancillas used: " << res.decision.m_used
              << "  depth: " << res.report.depth
              << "  size: " << res.report.size << '\n';
    circuit = std::move(res.circuit);
  }
  write_or_print(circuit, out, format);
  if (trace) print_stage_table(circuit);
  return kExitOk;
}

int cmd_synth_diag(const std::string& theta_file, uint64_t m,
                   const std::string& out, const std::string& format,
                   bool force, bool trace) {
  const PhaseVector pv = load_thetas(theta_file);
  const AlphaVector alpha = alphas_from_thetas(pv);
  DiagOptions opts;
  opts.force_emission = force;
  Circuit c = m >= 2 * uint64_t{pv.n}
                  ? synth_diag_ancilla(alpha, pv.n, m, opts)
                  : synth_diag_no_ancilla(alpha, pv.n, opts);
  write_or_print(c, out, format);
  if (trace) print_stage_table(c);
  return kExitOk;
}

int cmd_verify(const std::string& circuit_file, const std::string& state_file,
               const std::string& theta_file, const std::string& sparse_file,
               bool exhaustive, uint64_t samples) {
  const Circuit c = parse_json(slurp(circuit_file));
  if (!theta_file.empty()) {
    const PhaseVector pv = load_thetas(theta_file);
    const uint32_t n = pv.n;
    if (n > c.num_qubits())
      throw ValidationError("theta target is wider than the circuit");
    auto check = [&](uint64_t x) {
      BitVector in(c.num_qubits());
      for (uint32_t b = 0; b < n; ++b)
        if ((x >> (n - 1 - b)) & 1) in.set(b, true);
      const PhaseTrack t = run_phase_tracker(c, in);
      return t.bits == in &&
             std::abs(wrap_angle(t.phase - pv.theta[x])) <= 1e-9;
    };
    uint64_t checked = 0, failed = 0;
    if (exhaustive || (n <= 12 && samples == 0)) {
      for (uint64_t x = 0; x < (uint64_t{1} << n); ++x, ++checked)
        failed += !check(x);
    } else {
      std::mt19937_64 rng(12345);
      std::uniform_int_distribution<uint64_t> d(0, (uint64_t{1} << n) - 1);
      const uint64_t count = samples ? samples : 256;
      for (uint64_t i = 0; i < count; ++i, ++checked) failed += !check(d(rng));
    }
    std::cout << "phase checks: " << checked - failed << '/' << checked
              << " passed\n";
    return failed ? kExitVerify : kExitOk;
  }
  SparseState out = run_sparse(c, SparseState::zero(c.num_qubits()));
  SparseState target(c.num_qubits());
  uint32_t n = 0;
  if (!sparse_file.empty()) {
    const SparseTarget t = load_sparse(sparse_file);
    n = t.n;
    if (n > c.num_qubits())
      throw ValidationError("sparse target is wider than the circuit");
    for (const auto& [bits, amp] : t.entries) {
      BasisKey key{std::vector<uint64_t>((c.num_qubits() + 63) / 64, 0)};
      for (uint32_t b = 0; b < n; ++b)
        if (bits.get(b)) key.flip(b);
      target.set_amplitude(key, amp);
    }
  } else {
    const std::vector<Cx> v = load_state(state_file);
    while ((size_t{1} << n) < v.size()) ++n;
    if (n > c.num_qubits())
      throw ValidationError("state target is wider than the circuit");
    for (size_t k = 0; k < v.size(); ++k) {
      if (std::abs(v[k]) == 0) continue;
      BasisKey key{std::vector<uint64_t>((c.num_qubits() + 63) / 64, 0)};
      for (uint32_t b = 0; b < n; ++b)
        if ((k >> (n - 1 - b)) & 1) key.flip(b);
      target.set_amplitude(key, v[k]);
    }
  }
  const double f = fidelity(out, target);
  std::cout << "fidelity: " << f << '\n';
  return f >= 1 - 1e-9 ? kExitOk : kExitVerify;
}

int cmd_bench(uint32_t n, const std::string& m_list_csv, uint32_t trials,
              uint64_t seed, const std::string& kind, const std::string& out) {
  std::vector<uint64_t> m_list;
  std::stringstream ss(m_list_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    m_list.push_back(std::stoull(tok));
  }
  if (m_list.empty()) throw ValidationError("--m-list must name at least one m");
  BenchKind bk;
  if (kind == "qsp")
    bk = BenchKind::Qsp;
  else if (kind == "diag")
    bk = BenchKind::Diag;
  else
    throw ValidationError("--kind must be qsp or diag");
  const auto rows = bench_depth_curve(n, m_list, trials, seed, bk);
  const std::string csv = to_csv(rows);
  if (out.empty())
    std::cout << csv;
  else
    spit(out, csv);
  for (const BenchRow& r : rows)
    if (r.verify_status != "ok") return kExitVerify;
  return kExitOk;
}

int cmd_bounds(uint32_t n, uint64_t m) {
  const BoundsRecord r = bounds(n, m);
  std::cout << "n: " << r.n << "\nm: " << r.m
            << "\nqsp_lower: " << format_double(r.qsp_lower)
            << "\nqsp_upper_regime: " << r.qsp_upper_regime
            << "\nunitary_lower: " << format_double(r.unitary_lower)
            << "\nunitary_upper: " << format_double(r.unitary_upper) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-preparation circuit synthesis and verification"};
  app.require_subcommand(1);

  std::string state_file, sparse_file, theta_file, circuit_file;
  std::string out_file, format = "qasm", strategy = "auto", kind = "qsp";
  std::string m_list = "0";
  uint64_t m = 0, seed = 1, samples = 0;
  uint32_t n = 4, trials = 1;
  bool trace = false, force = false, exhaustive = false;

  auto* synth = app.add_subcommand("synth", "Compile a target state");
  synth->add_option("--state", state_file, "JSON array of [re, im] pairs");
  synth->add_option("--sparse", sparse_file, "JSON array of [\"bits\", re, im]");
  synth->add_option("--ancilla", m, "ancilla budget")->capture_default_str();
  synth->add_option("--strategy", strategy, "auto|ucg|hybrid|no-ancilla");
  synth->add_option("--out", out_file, "output path (stdout when absent)");
  synth->add_option("--format", format, "qasm|json")->capture_default_str();
  synth->add_flag("--trace-stages", trace, "print the per-stage depth table");

  auto* sd = app.add_subcommand("synth-diag", "Compile a diagonal unitary");
  sd->add_option("--thetas", theta_file, "JSON array of phases, first 0")
      ->required();
  sd->add_option("--ancilla", m, "ancilla budget")->capture_default_str();
  sd->add_option("--out", out_file, "output path (stdout when absent)");
  sd->add_option("--format", format, "qasm|json")->capture_default_str();
  sd->add_flag("--force-emission", force, "emit zero-angle rotations too");
  sd->add_flag("--trace-stages", trace, "print the per-stage depth table");

  auto* verify = app.add_subcommand("verify", "Check a circuit against a target");
  verify->add_option("--circuit", circuit_file, "circuit JSON file")->required();
  verify->add_option("--state", state_file, "dense target state");
  verify->add_option("--thetas", theta_file, "diagonal phase target");
  verify->add_option("--sparse", sparse_file, "sparse target");
  verify->add_flag("--exhaustive", exhaustive, "check every basis input");
  verify->add_option("--samples", samples, "sampled basis inputs");

  auto* bench = app.add_subcommand("bench", "Depth/size curve as CSV");
  bench->add_option("--n", n, "qubit count")->required();
  bench->add_option("--m-list", m_list, "comma-separated ancilla budgets");
  bench->add_option("--trials", trials, "trials per budget")
      ->capture_default_str();
  bench->add_option("--seed", seed, "rng seed")->capture_default_str();
  bench->add_option("--kind", kind, "qsp|diag")->capture_default_str();
  bench->add_option("--out", out_file, "CSV path (stdout when absent)");

  auto* bnd = app.add_subcommand("bounds", "Evaluate the depth-bound formulas");
  bnd->add_option("--n", n, "qubit count")->required();
  bnd->add_option("--m", m, "ancilla count")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      if (state_file.empty() == sparse_file.empty())
        throw ValidationError("synth needs exactly one of --state / --sparse");
      return cmd_synth(state_file, sparse_file, m, strategy, out_file, format,
                       trace);
    }
    if (sd->parsed())
      return cmd_synth_diag(theta_file, m, out_file, format, force, trace);
    if (verify->parsed()) {
      const int given = int(!state_file.empty()) + int(!theta_file.empty()) +
                        int(!sparse_file.empty());
      if (given != 1)
        throw ValidationError(
            "verify needs exactly one of --state / --thetas / --sparse");
      return cmd_verify(circuit_file, state_file, theta_file, sparse_file,
                        exhaustive, samples);
    }
    if (bench->parsed()) return cmd_bench(n, m_list, trials, seed, kind, out_file);
    if (bnd->parsed()) return cmd_bounds(n, m);
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << '\n';
    return kExitRegime;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
