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

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsat/compiler.hpp"
#include "qsat/formula.hpp"

namespace qsat::testing {

// The 3-variable, 4-clause golden instance used across the suites; its two
// models are (1,0,1) and (1,1,1).
inline Formula golden_formula() {
  Formula f;
  f.num_vars = 3;
  f.clauses = {
      Clause{{pos(1)}},
      Clause{{pos(2), pos(3)}},
      Clause{{pos(1), neg(3)}},
      Clause{{neg(1), neg(2), pos(3)}},
  };
  return f;
}

inline std::string golden_dimacs() {
  return "c golden instance\np cnf 3 4\n1 0\n2 3 0\n1 -3 0\n-1 -2 3 0\n";
}

// Independent model count: plain enumeration through eval_formula, no bitmask
// shortcuts. The quantum pipeline and brute_force_count are both checked
// against this.
inline long long enumeration_count(const Formula& f) {
  long long count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits) {
    count += eval_formula(f, Assignment(f.num_vars, bits));
  }
  return count;
}

// Random CNF with clause sizes 1..n over distinct variables (never wider than
// n, so always inside the counting regime).
inline Formula random_formula(std::mt19937& rng, int max_vars, int max_clauses) {
  Formula f;
  f.num_vars = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int m = std::uniform_int_distribution<int>(1, max_clauses)(rng);
  std::vector<int> variables(f.num_vars);
  for (int v = 0; v < f.num_vars; ++v) variables[v] = v + 1;
  for (int j = 0; j < m; ++j) {
    const int size = std::uniform_int_distribution<int>(1, f.num_vars)(rng);
    std::shuffle(variables.begin(), variables.end(), rng);
    Clause clause;
    for (int i = 0; i < size; ++i) {
      clause.literals.push_back(
          Literal{variables[i], std::uniform_int_distribution<int>(0, 1)(rng) == 1});
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

// Random CNF sampling literals with replacement: exact duplicates are dropped
// but x and ~x may land in the same clause, producing tautologies and clause
// sizes up to 2n.
inline Formula random_formula_with_tautologies(std::mt19937& rng, int max_vars,
                                               int max_clauses) {
  Formula f;
  f.num_vars = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int m = std::uniform_int_distribution<int>(1, max_clauses)(rng);
  for (int j = 0; j < m; ++j) {
    const int draws = std::uniform_int_distribution<int>(1, 2 * f.num_vars)(rng);
    Clause clause;
    for (int i = 0; i < draws; ++i) {
      const Literal lit{std::uniform_int_distribution<int>(1, f.num_vars)(rng),
                        std::uniform_int_distribution<int>(0, 1)(rng) == 1};
      bool seen = false;
      for (const Literal& existing : clause.literals) seen = seen || existing == lit;
      if (!seen) clause.literals.push_back(lit);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

// Random formula whose full register (vars + dust + result) fits in
// max_qubits; used for sparse/dense cross-checks.
inline Formula random_small_register_formula(std::mt19937& rng, int max_qubits) {
  for (;;) {
    Formula f = random_formula(rng, 4, 3);
    if (f.num_vars + predict_dust(f) + 1 <= max_qubits) return f;
  }
}

}  // namespace qsat::testing
