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

#include <vector>

#include "qsat/circuit.hpp"
#include "qsat/formula.hpp"

namespace qsat {

struct CompilationArtifact {
  Circuit circuit;
  int dust_used = 0;        // equals circuit.layout.num_dust
  long long gate_count = 0;  // equals circuit.gates.size()
  // Dust qubits consumed by each clause's literal loads and OR folds
  // (2*|C_j|-1 each); the cross-clause AND folds use max(m-2, 0) more.
  std::vector<int> per_clause_dust;
};

/// Exact dust demand of compile() for this formula:
///   sum |C_j|  (literal loads)
/// + sum (|C_j| - 1)  (pairwise OR folds)
/// + max(m - 2, 0)  (intermediate AND folds).
/// Requires m >= 1.
int predict_dust(const Formula& f);

/// Synthesizes the reversible circuit that computes the formula into the
/// result qubit on every basis input |a>|0...0>|0>, leaving the variable
/// register untouched. Three phases, dust allocated fresh in first-use order:
///   1. literal load: CNOT each literal's variable into a fresh dust qubit,
///      NOT it when negated;
///   2. OR fold per clause: fold loaded qubits pairwise into fresh dust via
///      CNOT(a,c) CNOT(b,c) CCNOT(a,b,c), i.e. c = a XOR b XOR ab = a OR b;
///   3. AND fold across clauses: chain clause outputs with CCNOT into fresh
///      dust, final fold targeting the result qubit (plain CNOT when m = 1).
/// Requires a valid formula with m >= 1.
CompilationArtifact compile(const Formula& f);

}  // namespace qsat
