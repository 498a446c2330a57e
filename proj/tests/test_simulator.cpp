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
#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "helpers.hpp"
#include "qsat/circuit_io.hpp"
#include "qsat/compiler.hpp"
#include "qsat/dense.hpp"
#include "qsat/errors.hpp"
#include "qsat/simulator.hpp"

using namespace qsat;
using qsat::testing::golden_formula;
using qsat::testing::random_small_register_formula;

namespace {

SparseState pipeline_state(const Formula& f, NormCheck check = NormCheck::PerGate) {
  const CompilationArtifact artifact = compile(f);
  SparseState state = prepare(artifact.circuit.layout);
  state = apply_hadamard_layer(std::move(state), artifact.circuit.layout);
  return apply_circuit(std::move(state), artifact.circuit, check);
}

bool states_equal(const SparseState& a, const SparseState& b, double tolerance) {
  if (a.size() != b.size() || a.num_qubits() != b.num_qubits()) return false;
  const auto order_a = a.entries_sorted_by_key();
  const auto order_b = b.entries_sorted_by_key();
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    const auto key_a = a.key(order_a[i]);
    const auto key_b = b.key(order_b[i]);
    if (!std::equal(key_a.begin(), key_a.end(), key_b.begin())) return false;
    if (std::abs(a.amplitude(order_a[i]) - b.amplitude(order_b[i])) > tolerance) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("prepare yields the single zero entry") {
  const QubitLayout layout{3, 14};
  const SparseState state = prepare(layout);
  REQUIRE(state.size() == 1);
  CHECK(state.key_low_bits(0, 64) == 0);
  CHECK(state.amplitude(0) == std::complex<double>{1.0, 0.0});
  CHECK(state.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(prepare(QubitLayout{1, 20}, 8), CapExceeded);
}

TEST_CASE("hadamard layer spreads the variable register uniformly") {
  SUBCASE("n = 3") {
    const QubitLayout layout{3, 2};
    SparseState state = apply_hadamard_layer(prepare(layout), layout);
    REQUIRE(state.size() == 8);
    for (std::size_t e = 0; e < 8; ++e) {
      CHECK(state.key_low_bits(e, 3) == e);  // increasing assignment order
      CHECK(state.amplitude(e).real() == doctest::Approx(0.3535533906).epsilon(1e-9));
      CHECK(state.amplitude(e).imag() == 0.0);
      CHECK_FALSE(state.key_bit(e, 3));  // dust still zero
      CHECK_FALSE(state.key_bit(e, 4));
      CHECK_FALSE(state.key_bit(e, layout.result_index()));
    }
    CHECK(state.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("n = 1") {
    const QubitLayout layout{1, 0};
    SparseState state = apply_hadamard_layer(prepare(layout), layout);
    REQUIRE(state.size() == 2);
    CHECK(state.amplitude(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("rejects anything but the fresh initial state") {
    const QubitLayout layout{2, 0};
    SparseState spread = apply_hadamard_layer(prepare(layout), layout);
    CHECK_THROWS_AS(apply_hadamard_layer(std::move(spread), layout), std::invalid_argument);
  }
}

TEST_CASE("golden instance branch structure after the circuit") {
  const SparseState state = pipeline_state(golden_formula());
  REQUIRE(state.size() == 8);

  const int result = state.num_qubits() - 1;
  std::set<std::uint64_t> satisfied;
  for (std::size_t e = 0; e < 8; ++e) {
    CHECK(std::abs(state.amplitude(e) - std::complex<double>{1.0 / std::sqrt(8.0), 0.0}) <
          1e-12);
    if (state.key_bit(e, result)) satisfied.insert(state.key_low_bits(e, 3));
  }
  // result bit set exactly on (1,0,1) and (1,1,1)
  CHECK(satisfied == std::set<std::uint64_t>{0b101, 0b111});
}

TEST_CASE("empty circuit is the identity") {
  Circuit circuit;
  circuit.layout = QubitLayout{2, 0};
  SparseState state = apply_hadamard_layer(prepare(circuit.layout), circuit.layout);
  const SparseState before = state;
  state = apply_circuit(std::move(state), circuit);
  CHECK(states_equal(state, before, 0.0));
}

TEST_CASE("reversed circuit undoes the circuit exactly") {
  const CompilationArtifact artifact = compile(golden_formula());
  const QubitLayout& layout = artifact.circuit.layout;

  SparseState state = apply_hadamard_layer(prepare(layout), layout);
  const SparseState reference = state;
  state = apply_circuit(std::move(state), artifact.circuit);

  Circuit reversed = artifact.circuit;
  std::reverse(reversed.gates.begin(), reversed.gates.end());
  // Round-trip the reversed circuit through the text format first.
  const Circuit reparsed = parse_circuit(serialize_circuit(reversed));
  state = apply_circuit(std::move(state), reparsed);

  CHECK(states_equal(state, reference, 1e-12));
}

TEST_CASE("measure_projection_e") {
  CHECK(measure_projection_e(pipeline_state(golden_formula())) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(measure_projection_e(pipeline_state(
            Formula{1, {Clause{{pos(1)}}, Clause{{neg(1)}}}})) == 0.0);
}

TEST_CASE("apply_v_theta produces the polarization triple") {
  const double theta = 1.0;
  SUBCASE("golden instance: alpha sqrt(3)/2, beta 1/2") {
    const SparseState state = pipeline_state(golden_formula());
    const PolarizedResult r = apply_v_theta(state, QubitLayout{3, 14}, theta);
    CHECK(r.alpha == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(r.beta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.theta == theta);
    CHECK(r.satisfying_count == 2);
    CHECK(r.alpha * r.alpha + r.beta * r.beta == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("tautology: every branch satisfies, alpha 0, beta 1") {
    const Formula f{1, {Clause{{pos(1), neg(1)}}}};
    CHECK(brute_force_count(f) == 2);
    const SparseState state = pipeline_state(f);
    const PolarizedResult r =
        apply_v_theta(state, QubitLayout{1, predict_dust(f)}, theta);
    CHECK(r.alpha == doctest::Approx(0.0));
    CHECK(r.beta == doctest::Approx(1.0));
    CHECK(r.satisfying_count == 2);
  }
  SUBCASE("contradiction: alpha 1, beta 0") {
    const Formula f{1, {Clause{{pos(1)}}, Clause{{neg(1)}}}};
    const SparseState state = pipeline_state(f);
    const PolarizedResult r =
        apply_v_theta(state, QubitLayout{1, predict_dust(f)}, theta);
    CHECK(r.alpha == doctest::Approx(1.0));
    CHECK(r.beta == 0.0);
    CHECK(r.satisfying_count == 0);
  }
}

TEST_CASE("decide maps the polarized triple to a verdict") {
  const Verdict sat = decide(PolarizedResult::from_projection(0.25, 3, 0.0));
  CHECK(sat.satisfiable);
  CHECK(sat.model_count == 2);

  const Verdict unsat = decide(PolarizedResult::from_projection(0.0, 3, 0.0));
  CHECK_FALSE(unsat.satisfiable);
  CHECK(unsat.model_count == 0);

  const Verdict all = decide(PolarizedResult::from_projection(1.0, 3, 0.0));
  CHECK(all.satisfiable);
  CHECK(all.model_count == 8);

  CHECK_THROWS_AS(PolarizedResult::from_projection(0.3, 3, 0.0), std::logic_error);
}

TEST_CASE("literal polarization coefficients on the golden instance") {
  const SparseState state = pipeline_state(golden_formula());
  SUBCASE("theta = 0") {
    const VThetaLiteral literal = v_theta_literal(state, 0.0);
    CHECK(literal.zero_coeff.real() == doctest::Approx(6.0 / std::sqrt(8.0)).epsilon(1e-12));
    CHECK(literal.zero_coeff.imag() == doctest::Approx(0.0));
    CHECK(literal.one_coeff.real() == doctest::Approx(2.0 / std::sqrt(8.0)).epsilon(1e-12));
    CHECK(literal.norm_squared == doctest::Approx(5.0).epsilon(1e-12));
  }
  SUBCASE("theta only phases the one-coefficient") {
    const VThetaLiteral literal = v_theta_literal(state, 1.3);
    CHECK(std::abs(literal.one_coeff) == doctest::Approx(2.0 / std::sqrt(8.0)).epsilon(1e-12));
    CHECK(std::arg(literal.one_coeff) == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(literal.norm_squared == doctest::Approx(5.0).epsilon(1e-12));
  }
}

TEST_CASE("norm check trips on a corrupted state") {
  Circuit circuit;
  circuit.layout = QubitLayout{1, 0};
  circuit.gates = {Gate::x(1)};

  SparseState bad(circuit.layout.total());
  bad.append(std::uint64_t{0}, std::complex<double>{0.5, 0.0});
  CHECK_THROWS_AS(apply_circuit(std::move(bad), circuit, NormCheck::PerGate),
                  std::logic_error);
}

TEST_CASE("engine guards") {
  SUBCASE("state and circuit sizes must match") {
    Circuit circuit;
    circuit.layout = QubitLayout{2, 1};
    SparseState wrong(3);
    wrong.append(std::uint64_t{0}, std::complex<double>{1.0, 0.0});
    CHECK_THROWS_AS(apply_circuit(std::move(wrong), circuit), std::invalid_argument);
  }
  SUBCASE("dense engine caps at 22 qubits") {
    CHECK_THROWS_AS(DenseState(23), CapExceeded);
    CHECK_THROWS_AS(DenseState(0), CapExceeded);
  }
}

TEST_CASE("sparse and dense engines agree on random small instances") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 10; ++round) {
    const Formula f = random_small_register_formula(rng, 22);
    const CompilationArtifact artifact = compile(f);
    const SparseState sparse = pipeline_state(f);
    const DenseState dense = run_dense(artifact.circuit);

    CHECK(std::abs(dense.norm_squared() - 1.0) < 1e-9);
    CHECK(dense.projection_result_one() ==
          doctest::Approx(measure_projection_e(sparse)).epsilon(1e-12));

    double matched_mass = 0.0;
    for (std::size_t e = 0; e < sparse.size(); ++e) {
      const std::uint64_t index = sparse.key_low_bits(e, 64);
      CHECK(std::abs(dense.amplitude(index) - sparse.amplitude(e)) <= 1e-12);
      matched_mass += std::norm(dense.amplitude(index));
    }
    CHECK(matched_mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("multi-word keys behave like one-word keys") {
  // 130 qubits forces three key words; run a couple of gates across words.
  SparseState state(130);
  state.append(std::uint64_t{1}, std::complex<double>{1.0, 0.0});
  CHECK(state.key_words() == 3);

  Circuit circuit;
  circuit.layout = QubitLayout{1, 128};  // result index 129
  circuit.gates = {Gate::cx(0, 70), Gate::ccx(0, 70, 129), Gate::x(64)};
  state = apply_circuit(std::move(state), circuit);

  CHECK(state.key_bit(0, 0));
  CHECK(state.key_bit(0, 70));
  CHECK(state.key_bit(0, 129));
  CHECK(state.key_bit(0, 64));
  CHECK_FALSE(state.key_bit(0, 1));
  CHECK(state.size() == 1);
}
