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

#include "qsprep/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace qsprep {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::CNOT: return "cx";
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::Rz: return "rz";
    case GateKind::Ry: return "ry";
    case GateKind::Phase: return "p";
  }
  return "?";
}

void Circuit::add(const Gate& g) {
  if (g.q0 >= num_qubits_)
    throw ValidationError("gate qubit index out of range");
  if (g.kind == GateKind::CNOT) {
    if (g.q1 >= num_qubits_)
      throw ValidationError("CNOT target index out of range");
    if (g.q0 == g.q1)
      throw ValidationError("CNOT control and target must be distinct");
  } else {
    if (g.q1 != kNoQubit)
      throw ValidationError("single-qubit gate with two qubit indices");
  }
  if (is_rotation(g.kind)) {
    if (!std::isfinite(g.angle))
      throw ValidationError("rotation angle must be finite");
  }
  gates_.push_back(g);
  stage_of_.push_back(current_stage_);
}

uint16_t Circuit::intern_stage(std::string_view label) {
  for (size_t i = 0; i < stage_names_.size(); ++i)
    if (stage_names_[i] == label) return static_cast<uint16_t>(i);
  stage_names_.emplace_back(label);
  return static_cast<uint16_t>(stage_names_.size() - 1);
}

void Circuit::set_stage(std::string_view label) { current_stage_ = intern_stage(label); }

std::string_view Circuit::stage_label(size_t gate_index) const {
  return stage_names_[stage_of_[gate_index]];
}

void Circuit::add_register(std::string name, RegisterRole role, uint32_t first,
                           uint32_t size) {
  if (first + size > num_qubits_)
    throw ValidationError("register exceeds circuit width");
  for (const auto& r : registers_) {
    const bool disjoint = first + size <= r.first || r.first + r.size <= first;
    if (!disjoint) throw ValidationError("registers must be disjoint");
  }
  registers_.push_back({std::move(name), role, first, size});
}

void Circuit::append(const Circuit& other, std::string_view stage_prefix) {
  if (other.num_qubits_ > num_qubits_)
    throw ValidationError("appended circuit is wider than target");
  std::vector<uint32_t> id{};
  id.reserve(other.num_qubits_);
  for (uint32_t q = 0; q < other.num_qubits_; ++q) id.push_back(q);
  append_mapped(other, id, stage_prefix);
}

void Circuit::append_mapped(const Circuit& other, const std::vector<uint32_t>& map,
                            std::string_view stage_prefix) {
  if (map.size() < other.num_qubits_)
    throw ValidationError("qubit map smaller than appended circuit");
  // Remap the other circuit's stage ids into ours once.
  std::vector<uint16_t> stage_map(other.stage_names_.size(), 0);
  for (size_t i = 0; i < other.stage_names_.size(); ++i) {
    const std::string& name = other.stage_names_[i];
    if (name.empty() && stage_prefix.empty()) {
      stage_map[i] = current_stage_;
    } else {
      std::string full = std::string(stage_prefix) + name;
      stage_map[i] = intern_stage(full);
    }
  }
  const uint16_t saved = current_stage_;
  for (size_t i = 0; i < other.gates_.size(); ++i) {
    Gate g = other.gates_[i];
    g.q0 = map[g.q0];
    if (g.kind == GateKind::CNOT) g.q1 = map[g.q1];
    current_stage_ = stage_map[other.stage_of_[i]];
    add(g);
  }
  current_stage_ = saved;
}

namespace {

// ASAP layering over an arbitrary gate subsequence.
uint32_t asap_depth(const Circuit& c, const std::vector<size_t>& idx,
                    std::vector<uint32_t>& busy) {
  std::fill(busy.begin(), busy.end(), 0u);
  uint32_t d = 0;
  for (size_t i : idx) {
    const Gate& g = c.gates()[i];
    uint32_t layer = busy[g.q0] + 1;
    if (g.kind == GateKind::CNOT) layer = std::max(layer, busy[g.q1] + 1);
    busy[g.q0] = layer;
    if (g.kind == GateKind::CNOT) busy[g.q1] = layer;
    d = std::max(d, layer);
  }
  return d;
}

}  // namespace

DepthReport depth(const Circuit& c) {
  DepthReport rep;
  rep.size = c.size();
  for (const Gate& g : c.gates())
    if (g.kind == GateKind::CNOT) ++rep.cnot_count;

  std::vector<uint32_t> busy(c.num_qubits(), 0);
  {
    std::vector<size_t> all(c.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    rep.depth = asap_depth(c, all, busy);
  }

  if (!c.has_stages()) {
    rep.staged_depth = rep.depth;
    return rep;
  }
  // Group gates by tag in order of first appearance.
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<size_t>> groups;
  for (size_t i = 0; i < c.size(); ++i) {
    std::string label(c.stage_label(i));
    if (label.empty()) label = "(untagged)";
    auto [it, inserted] = groups.try_emplace(label);
    if (inserted) order.push_back(label);
    it->second.push_back(i);
  }
  uint32_t total = 0;
  for (const std::string& label : order) {
    StageDepth sd;
    sd.label = label;
    sd.size = groups[label].size();
    sd.depth = asap_depth(c, groups[label], busy);
    total += sd.depth;
    rep.per_stage.push_back(std::move(sd));
  }
  rep.staged_depth = total;
  return rep;
}

Circuit invert(const Circuit& c) {
  Circuit out(c.num_qubits());
  for (const auto& r : c.registers()) out.add_register(r.name, r.role, r.first, r.size);
  for (size_t i = c.size(); i-- > 0;) {
    Gate g = c.gates()[i];
    if (is_rotation(g.kind)) {
      g.angle = -g.angle;
    } else if (g.kind == GateKind::S) {
      g.kind = GateKind::Sdg;
    } else if (g.kind == GateKind::Sdg) {
      g.kind = GateKind::S;
    }
    out.set_stage(c.stage_label(i));
    out.add(g);
  }
  out.set_stage("");
  return out;
}

}  // namespace qsprep
