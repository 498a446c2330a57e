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

/// A Boolean variable reference with optional negation. Variables are numbered
/// 1..n as in DIMACS.
struct Literal {
  int variable = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int variable) { return Literal{variable, false}; }
inline Literal neg(int variable) { return Literal{variable, true}; }

/// Disjunction of literals. Validation rejects empty clauses and exact
/// duplicate literals; a clause holding both x and ~x is a tautology and is
/// allowed.
struct Clause {
  std::vector<Literal> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// CNF instance over variables x_1..x_num_vars. An empty clause list is
/// satisfiable by convention (empty conjunction).
struct Formula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Truth assignment for x_1..x_n, packed as bits: bit k-1 holds the value of
/// x_k. Supports up to 64 variables.
class Assignment {
 public:
  Assignment(int num_vars, std::uint64_t bits);
  static Assignment from_values(const std::vector<bool>& values);

  int num_vars() const { return num_vars_; }
  std::uint64_t bits() const { return bits_; }

  /// Value of x_variable (1-based index).
  bool value(int variable) const;

 private:
  int num_vars_;
  std::uint64_t bits_;
};

/// Throws std::invalid_argument when a structural invariant is broken:
/// num_vars < 1, an empty clause, a duplicate literal within a clause, or a
/// variable index outside 1..num_vars.
void validate(const Formula& f);

/// OR over the clause's literal truth values under the assignment.
bool eval_clause(const Clause& clause, const Assignment& a);

/// AND over all clause values; true for an empty clause list.
bool eval_formula(const Formula& f, const Assignment& a);

inline constexpr int kDefaultOracleMaxVars = 24;

/// Exhaustive #SAT count over all 2^n assignments. The formula is satisfiable
/// iff the returned count is >= 1. Throws CapExceeded when
/// f.num_vars > max_vars.
long long brute_force_count(const Formula& f, int max_vars = kDefaultOracleMaxVars);

}  // namespace qsat
