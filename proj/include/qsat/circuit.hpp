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

#include <cstdint>
#include <vector>

namespace qsat {

/// Register layout: variable qubits at indices 0..num_vars-1, dust (ancilla)
/// qubits at num_vars..num_vars+num_dust-1, and the result qubit last.
struct QubitLayout {
  int num_vars = 0;
  int num_dust = 0;

  int total() const { return num_vars + num_dust + 1; }
  int result_index() const { return total() - 1; }
  bool is_variable(int qubit) const { return qubit >= 0 && qubit < num_vars; }

  friend bool operator==(const QubitLayout&, const QubitLayout&) = default;
};

enum class GateKind { Not, Cnot, Ccnot };

/// One reversible gate over absolute qubit indices. Unused control slots
/// are -1.
struct Gate {
  GateKind kind = GateKind::Not;
  int control0 = -1;
  int control1 = -1;
  int target = 0;

  static Gate x(int target) { return Gate{GateKind::Not, -1, -1, target}; }
  static Gate cx(int control, int target) {
    return Gate{GateKind::Cnot, control, -1, target};
  }
  static Gate ccx(int control0, int control1, int target) {
    return Gate{GateKind::Ccnot, control0, control1, target};
  }

  int control_count() const {
    switch (kind) {
      case GateKind::Not: return 0;
      case GateKind::Cnot: return 1;
      case GateKind::Ccnot: return 2;
    }
    return 0;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  QubitLayout layout;
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Image of a computational-basis index under the gate: the target bit flips
/// iff every control bit is 1. A bijection on 0..2^q-1. Qubit i occupies bit i
/// of the index (LSB first); only valid for gates addressing qubits < 64 --
/// the sparse engine handles wider registers with multi-word keys.
std::uint64_t gate_permutation(const Gate& g, std::uint64_t basis_index);

/// Gate-level validity: control slots match the kind, all indices distinct and
/// inside 0..num_qubits-1. Throws std::invalid_argument.
void validate(const Gate& g, int num_qubits);

/// Circuit-level validity: every gate valid for the layout, and no CNOT/CCNOT
/// targets a variable qubit (the variable register is read-only for them).
void validate(const Circuit& c);

}  // namespace qsat
