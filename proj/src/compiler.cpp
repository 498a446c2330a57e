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

#include "qsat/compiler.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace qsat {

int predict_dust(const Formula& f) {
  if (f.clauses.empty()) {
    throw std::invalid_argument("dust prediction needs at least one clause");
  }
  long long dust = 0;
  for (const Clause& clause : f.clauses) {
    const long long k = static_cast<long long>(clause.literals.size());
    dust += k;          // literal loads
    dust += k - 1;      // OR folds
  }
  const long long m = static_cast<long long>(f.clauses.size());
  dust += m >= 2 ? m - 2 : 0;  // intermediate AND folds
  if (dust > 1'000'000'000) {
    throw std::invalid_argument("formula needs " + std::to_string(dust) +
                                " dust qubits, beyond any runnable register");
  }
  return static_cast<int>(dust);
}

CompilationArtifact compile(const Formula& f) {
  validate(f);
  if (f.clauses.empty()) {
    throw std::invalid_argument("compilation needs at least one clause");
  }

  const int n = f.num_vars;
  const int dust_total = predict_dust(f);
  Circuit circuit;
  circuit.layout = QubitLayout{n, dust_total};
  const int result = circuit.layout.result_index();

  int next_dust = n;  // fresh dust qubits in first-use order
  std::vector<int> clause_outputs;
  std::vector<int> per_clause_dust;
  clause_outputs.reserve(f.clauses.size());
  per_clause_dust.reserve(f.clauses.size());

  for (const Clause& clause : f.clauses) {
    const int dust_before = next_dust;

    // Phase 1: copy each literal into fresh dust, negating in place.
    std::vector<int> loaded;
    loaded.reserve(clause.literals.size());
    for (const Literal& lit : clause.literals) {
      const int d = next_dust++;
      circuit.gates.push_back(Gate::cx(lit.variable - 1, d));
      if (lit.negated) circuit.gates.push_back(Gate::x(d));
      loaded.push_back(d);
    }

    // Phase 2: pairwise OR folds, c = a XOR b XOR ab.
    int out = loaded[0];
    for (std::size_t i = 1; i < loaded.size(); ++i) {
      const int c = next_dust++;
      circuit.gates.push_back(Gate::cx(out, c));
      circuit.gates.push_back(Gate::cx(loaded[i], c));
      circuit.gates.push_back(Gate::ccx(out, loaded[i], c));
      out = c;
    }

    per_clause_dust.push_back(next_dust - dust_before);
    clause_outputs.push_back(out);
  }

  // Phase 3: AND folds across clause outputs, final fold into the result.
  if (clause_outputs.size() == 1) {
    circuit.gates.push_back(Gate::cx(clause_outputs[0], result));
  } else {
    int acc = clause_outputs[0];
    for (std::size_t j = 1; j + 1 < clause_outputs.size(); ++j) {
      const int t = next_dust++;
      circuit.gates.push_back(Gate::ccx(acc, clause_outputs[j], t));
      acc = t;
    }
    circuit.gates.push_back(Gate::ccx(acc, clause_outputs.back(), result));
  }

  assert(next_dust == n + dust_total);
  validate(circuit);

  CompilationArtifact artifact;
  artifact.circuit = std::move(circuit);
  artifact.dust_used = dust_total;
  artifact.gate_count = static_cast<long long>(artifact.circuit.gates.size());
  artifact.per_clause_dust = std::move(per_clause_dust);
  return artifact;
}

}  // namespace qsat
