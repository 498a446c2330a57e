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

#include "qsat/formula.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "qsat/errors.hpp"

namespace qsat {

Assignment::Assignment(int num_vars, std::uint64_t bits) : num_vars_(num_vars), bits_(bits) {
  if (num_vars < 1 || num_vars > 64) {
    throw std::invalid_argument("assignment needs 1..64 variables, got " +
                                std::to_string(num_vars));
  }
  if (num_vars < 64) bits_ &= (std::uint64_t{1} << num_vars) - 1;
}

Assignment Assignment::from_values(const std::vector<bool>& values) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k]) bits |= std::uint64_t{1} << k;
  }
  return Assignment(static_cast<int>(values.size()), bits);
}

bool Assignment::value(int variable) const {
  if (variable < 1 || variable > num_vars_) {
    throw std::out_of_range("variable index " + std::to_string(variable) +
                            " outside 1.." + std::to_string(num_vars_));
  }
  return (bits_ >> (variable - 1)) & 1u;
}

void validate(const Formula& f) {
  if (f.num_vars < 1) {
    throw std::invalid_argument("formula needs at least one variable");
  }
  std::unordered_set<int> seen;  // signed literal encoding, negated = -variable
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Clause& clause = f.clauses[j];
    const std::string where = "clause " + std::to_string(j + 1);
    if (clause.literals.empty()) {
      throw std::invalid_argument(where + " is empty");
    }
    seen.clear();
    for (const Literal& lit : clause.literals) {
      if (lit.variable < 1) {
        throw std::invalid_argument(where + ": variable index must be >= 1");
      }
      if (lit.variable > f.num_vars) {
        throw std::invalid_argument(where + ": variable index " +
                                    std::to_string(lit.variable) + " exceeds n = " +
                                    std::to_string(f.num_vars));
      }
      if (!seen.insert(lit.negated ? -lit.variable : lit.variable).second) {
        throw std::invalid_argument(where + ": duplicate literal " +
                                    std::string(lit.negated ? "-" : "") +
                                    std::to_string(lit.variable));
      }
    }
  }
}

bool eval_clause(const Clause& clause, const Assignment& a) {
  for (const Literal& lit : clause.literals) {
    const bool value = a.value(lit.variable);
    if (lit.negated ? !value : value) return true;
  }
  return false;
}

bool eval_formula(const Formula& f, const Assignment& a) {
  for (const Clause& clause : f.clauses) {
    if (!eval_clause(clause, a)) return false;
  }
  return true;
}

long long brute_force_count(const Formula& f, int max_vars) {
  validate(f);
  if (f.num_vars > max_vars) {
    throw CapExceeded("brute-force oracle capped at " + std::to_string(max_vars) +
                      " variables, formula has " + std::to_string(f.num_vars));
  }

  // Per-clause bitmasks: satisfied iff a positive literal is set or a negated
  // one is clear.
  struct Masks {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
  };
  std::vector<Masks> masks(f.clauses.size());
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    for (const Literal& lit : f.clauses[j].literals) {
      const std::uint64_t bit = std::uint64_t{1} << (lit.variable - 1);
      if (lit.negated) {
        masks[j].negative |= bit;
      } else {
        masks[j].positive |= bit;
      }
    }
  }

  const std::uint64_t limit = std::uint64_t{1} << f.num_vars;
  long long count = 0;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    bool satisfied = true;
    for (const Masks& m : masks) {
      if ((bits & m.positive) == 0 && (~bits & m.negative) == 0) {
        satisfied = false;
        break;
      }
    }
    count += satisfied;
  }
  return count;
}

}  // namespace qsat
