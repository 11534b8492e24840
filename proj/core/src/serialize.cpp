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

#include "qsprep/serialize.hpp"

#include <charconv>

#include <json.hpp>

namespace qsprep {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

EmitFormat format_from_label(std::string_view label) {
  if (label == "qasm" || label == "qasm_text") return EmitFormat::QasmText;
  if (label == "json") return EmitFormat::Json;
  throw ValidationError("unknown emit format: " + std::string(label));
}

std::string emit(const Circuit& c, EmitFormat format) {
  std::string out;
  if (format == EmitFormat::Json) {
    out += "{\"n\":";
    out += std::to_string(c.num_qubits());
    out += ",\"gates\":[";
    bool first = true;
    for (const Gate& g : c.gates()) {
      if (!first) out += ',';
      first = false;
      out += "[\"";
      out += gate_name(g.kind);
      out += '"';
      if (is_rotation(g.kind)) {
        out += ',';
        out += format_double(g.angle);
      }
      out += ',';
      out += std::to_string(g.q0);
      if (g.kind == GateKind::CNOT) {
        out += ',';
        out += std::to_string(g.q1);
      }
      out += ']';
    }
    out += "]}";
    return out;
  }
  // QasmText
  for (const Gate& g : c.gates()) {
    out += gate_name(g.kind);
    if (is_rotation(g.kind)) {
      out += '(';
      out += format_double(g.angle);
      out += ')';
    }
    out += " q[";
    out += std::to_string(g.q0);
    out += ']';
    if (g.kind == GateKind::CNOT) {
      out += ",q[";
      out += std::to_string(g.q1);
      out += ']';
    }
    out += ";\n";
  }
  return out;
}

Circuit parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("circuit JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("gates"))
    throw ValidationError("circuit JSON must have \"n\" and \"gates\"");
  Circuit c(j.at("n").get<uint32_t>());
  for (const auto& g : j.at("gates")) {
    if (!g.is_array() || g.empty() || !g[0].is_string())
      throw ValidationError("each gate must be an array starting with a name");
    const std::string name = g[0].get<std::string>();
    auto qubit = [&](size_t idx) { return g.at(idx).get<uint32_t>(); };
    if (name == "cx") {
      if (g.size() != 3) throw ValidationError("cx takes two qubit indices");
      c.cnot(qubit(1), qubit(2));
    } else if (name == "x" || name == "h" || name == "s" || name == "sdg") {
      if (g.size() != 2) throw ValidationError(name + " takes one qubit index");
      if (name == "x") c.x(qubit(1));
      if (name == "h") c.h(qubit(1));
      if (name == "s") c.s(qubit(1));
      if (name == "sdg") c.sdg(qubit(1));
    } else if (name == "rz" || name == "ry" || name == "p") {
      if (g.size() != 3) throw ValidationError(name + " takes angle and qubit");
      const double angle = g.at(1).get<double>();
      if (name == "rz") c.rz(angle, qubit(2));
      if (name == "ry") c.ry(angle, qubit(2));
      if (name == "p") c.phase(angle, qubit(2));
    } else {
      throw ValidationError("unknown gate name: " + name);
    }
  }
  return c;
}

}  // namespace qsprep
