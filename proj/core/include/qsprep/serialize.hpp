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
#include <string_view>

#include "qsprep/circuit.hpp"

namespace qsprep {

enum class EmitFormat { QasmText, Json };

/// "qasm" -> QasmText, "json" -> Json; anything else is a ValidationError.
EmitFormat format_from_label(std::string_view label);

/// Deterministic byte-exact text. Json: {"n":N,"gates":[["cx",0,1],...]}.
/// QasmText: one gate per line, OpenQASM-2 style bodies without a header
/// (the CLI prepends the header).
std::string emit(const Circuit& c, EmitFormat format);

/// Inverse of the Json emitter; parse(emit(c, Json)) structurally equals c.
Circuit parse_json(std::string_view text);

/// Shortest round-trip decimal form of a double (to_chars).
std::string format_double(double v);

}  // namespace qsprep
