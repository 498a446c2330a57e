// Copyright 2026 The qsat authors
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

#include <iosfwd>
#include <string>

#include "qsat/circuit.hpp"

namespace qsat {

/// Line-oriented circuit text format (see docs/circuit_format.md):
///   qubits <q> vars <n> dust <l>
///   x <t> | cx <c> <t> | ccx <c1> <c2> <t>
/// One gate per line; serialize/parse round-trip to structural equality.
std::string serialize_circuit(const Circuit& c);

/// Throws ParseError (with line number) on malformed lines, inconsistent
/// headers, out-of-range or duplicate indices, and CNOT/CCNOT gates targeting
/// a variable qubit. Blank lines and `#` comment lines are skipped.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);

}  // namespace qsat
