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

#include "qsat/circuit.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace qsat {

std::uint64_t gate_permutation(const Gate& g, std::uint64_t basis_index) {
  assert(g.target >= 0 && g.target < 64);
  assert(g.control0 < 64 && g.control1 < 64);
  const std::uint64_t target_bit = std::uint64_t{1} << g.target;
  switch (g.kind) {
    case GateKind::Not:
      return basis_index ^ target_bit;
    case GateKind::Cnot:
      return (basis_index >> g.control0) & 1u ? basis_index ^ target_bit : basis_index;
    case GateKind::Ccnot:
      return ((basis_index >> g.control0) & 1u) && ((basis_index >> g.control1) & 1u)
                 ? basis_index ^ target_bit
                 : basis_index;
  }
  return basis_index;
}

namespace {

void check_index(int index, int num_qubits, const char* role) {
  if (index < 0 || index >= num_qubits) {
    throw std::invalid_argument(std::string(role) + " index " + std::to_string(index) +
                                " outside 0.." + std::to_string(num_qubits - 1));
  }
}

}  // namespace

void validate(const Gate& g, int num_qubits) {
  check_index(g.target, num_qubits, "target");
  switch (g.kind) {
    case GateKind::Not:
      if (g.control0 != -1 || g.control1 != -1) {
        throw std::invalid_argument("NOT gate takes no controls");
      }
      break;
    case GateKind::Cnot:
      check_index(g.control0, num_qubits, "control");
      if (g.control1 != -1) {
        throw std::invalid_argument("CNOT gate takes exactly one control");
      }
      if (g.control0 == g.target) {
        throw std::invalid_argument("CNOT control and target must differ");
      }
      break;
    case GateKind::Ccnot:
      check_index(g.control0, num_qubits, "control");
      check_index(g.control1, num_qubits, "control");
      if (g.control0 == g.control1 || g.control0 == g.target || g.control1 == g.target) {
        throw std::invalid_argument("CCNOT indices must be pairwise distinct");
      }
      break;
  }
}

void validate(const Circuit& c) {
  if (c.layout.num_vars < 1) {
    throw std::invalid_argument("layout needs at least one variable qubit");
  }
  if (c.layout.num_dust < 0) {
    throw std::invalid_argument("layout dust count must be >= 0");
  }
  const int q = c.layout.total();
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    try {
      validate(g, q);
      if (g.kind != GateKind::Not && c.layout.is_variable(g.target)) {
        throw std::invalid_argument("controlled gate targets variable qubit " +
                                    std::to_string(g.target));
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("gate " + std::to_string(i + 1) + ": " + e.what());
    }
  }
}

}  // namespace qsat
