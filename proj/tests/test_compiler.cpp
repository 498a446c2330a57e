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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "qsat/circuit_io.hpp"
#include "qsat/compiler.hpp"
#include "qsat/dimacs.hpp"
#include "qsat/simulator.hpp"

using namespace qsat;
using qsat::testing::golden_formula;
using qsat::testing::random_formula;
using qsat::testing::random_formula_with_tautologies;

namespace {

struct BasisRun {
  std::uint64_t variable_bits;
  bool result_bit;
};

// Runs the circuit on the basis input |a>|0...0>|0>.
BasisRun run_on_basis(const Circuit& circuit, std::uint64_t assignment_bits) {
  SparseState state(circuit.layout.total());
  state.append(assignment_bits, std::complex<double>{1.0, 0.0});
  state = apply_circuit(std::move(state), circuit);
  return BasisRun{state.key_low_bits(0, circuit.layout.num_vars),
                  state.key_bit(0, circuit.layout.result_index())};
}

void check_truth_table_equivalence(const Formula& f) {
  const CompilationArtifact artifact = compile(f);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits) {
    const BasisRun run = run_on_basis(artifact.circuit, bits);
    CHECK(run.variable_bits == bits);
    CHECK(run.result_bit == eval_formula(f, Assignment(f.num_vars, bits)));
  }
}

}  // namespace

TEST_CASE("golden instance compiles to the expected resource counts") {
  const Formula f = golden_formula();
  CHECK(predict_dust(f) == 14);

  const CompilationArtifact artifact = compile(f);
  CHECK(artifact.dust_used == 14);
  CHECK(artifact.dust_used == artifact.circuit.layout.num_dust);
  CHECK(artifact.gate_count == 26);
  CHECK(artifact.gate_count == static_cast<long long>(artifact.circuit.gates.size()));
  CHECK(artifact.per_clause_dust == std::vector<int>{1, 3, 3, 5});
  CHECK(artifact.circuit.layout.total() == 18);
}

TEST_CASE("golden instance circuit computes the formula on every basis input") {
  check_truth_table_equivalence(golden_formula());
}

TEST_CASE("single positive unit clause transfers the variable to the result") {
  const Formula f{1, {Clause{{pos(1)}}}};
  CHECK(predict_dust(f) == 1);

  const CompilationArtifact artifact = compile(f);
  CHECK(artifact.circuit.gates ==
        std::vector<Gate>{Gate::cx(0, 1), Gate::cx(1, 2)});
  check_truth_table_equivalence(f);
}

TEST_CASE("compile handles the small shapes") {
  SUBCASE("single negated unit clause") {
    check_truth_table_equivalence(Formula{1, {Clause{{neg(1)}}}});
  }
  SUBCASE("two clauses use the result as the only AND target") {
    const Formula f{2, {Clause{{pos(1)}}, Clause{{pos(2)}}}};
    const CompilationArtifact artifact = compile(f);
    CHECK(artifact.dust_used == 2);
    check_truth_table_equivalence(f);
  }
  SUBCASE("tautological clause compiles like any other") {
    check_truth_table_equivalence(Formula{2, {Clause{{pos(1), neg(1)}}, Clause{{pos(2)}}}});
  }
  SUBCASE("contradiction") {
    check_truth_table_equivalence(Formula{1, {Clause{{pos(1)}}, Clause{{neg(1)}}}});
  }
  SUBCASE("m = 0 is rejected") {
    CHECK_THROWS_AS(compile(Formula{2, {}}), std::invalid_argument);
    CHECK_THROWS_AS(predict_dust(Formula{2, {}}), std::invalid_argument);
  }
}

TEST_CASE("compiled circuits agree with eval_formula exhaustively (n <= 5)") {
  std::mt19937 rng(20260101);
  for (int round = 0; round < 60; ++round) {
    const Formula f = round % 4 == 0 ? random_formula_with_tautologies(rng, 4, 4)
                                     : random_formula(rng, 5, 6);
    CAPTURE(to_dimacs(f));
    check_truth_table_equivalence(f);
  }
}

TEST_CASE("compiled circuits agree with eval_formula on sampled assignments (n <= 10)") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 10; ++round) {
    const Formula f = random_formula(rng, 10, 8);
    const CompilationArtifact artifact = compile(f);
    std::uniform_int_distribution<std::uint64_t> pick(
        0, (std::uint64_t{1} << f.num_vars) - 1);
    for (int sample = 0; sample < 50; ++sample) {
      const std::uint64_t bits = pick(rng);
      const BasisRun run = run_on_basis(artifact.circuit, bits);
      CHECK(run.variable_bits == bits);
      CHECK(run.result_bit == eval_formula(f, Assignment(f.num_vars, bits)));
    }
  }
}

TEST_CASE("compile is deterministic byte-for-byte") {
  std::mt19937 rng(11);
  for (int round = 0; round < 10; ++round) {
    const Formula f = random_formula(rng, 8, 6);
    CHECK(serialize_circuit(compile(f).circuit) == serialize_circuit(compile(f).circuit));
  }
}

TEST_CASE("compiler output round-trips through the circuit format") {
  std::mt19937 rng(12);
  for (int round = 0; round < 20; ++round) {
    const Circuit circuit = compile(random_formula(rng, 6, 5)).circuit;
    CHECK(parse_circuit(serialize_circuit(circuit)) == circuit);
  }
}

TEST_CASE("dust accounting: prediction exact, bounds hold, variables never written") {
  std::mt19937 rng(13);
  for (int round = 0; round < 80; ++round) {
    const Formula f = round % 3 == 0 ? random_formula_with_tautologies(rng, 5, 5)
                                     : random_formula(rng, 8, 8);
    const CompilationArtifact artifact = compile(f);
    const long long m = static_cast<long long>(f.clauses.size());
    const long long n = f.num_vars;

    CHECK(artifact.dust_used == predict_dust(f));
    long long per_clause_total = 0;
    for (int d : artifact.per_clause_dust) per_clause_total += d;
    CHECK(per_clause_total + std::max<long long>(m - 2, 0) == artifact.dust_used);

    CHECK(artifact.dust_used <= 4 * m * n - 1);
    CHECK(artifact.gate_count <= 11 * m * n - 3 * m);

    for (const Gate& g : artifact.circuit.gates) {
      CHECK(g.target >= f.num_vars);  // dust or result only, for every kind
    }
  }
}
