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

#include "qsat/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <string>
#include <utility>

#include "qsat/dense.hpp"
#include "qsat/errors.hpp"

namespace qsat {

namespace {

// m = 0 is satisfiable by the empty-conjunction convention; a single NOT on
// the result qubit makes every branch read 1 so the generic pipeline applies.
CompilationArtifact trivially_true_artifact(int num_vars) {
  CompilationArtifact artifact;
  artifact.circuit.layout = QubitLayout{num_vars, 0};
  artifact.circuit.gates.push_back(Gate::x(artifact.circuit.layout.result_index()));
  artifact.dust_used = 0;
  artifact.gate_count = 1;
  return artifact;
}

DenseCheckResult cross_check_dense(const SparseState& state, const Circuit& circuit) {
  DenseCheckResult check;
  check.qubits = circuit.layout.total();
  if (check.qubits > DenseState::kMaxQubits) {
    return check;  // ran stays false
  }
  check.ran = true;

  const DenseState dense = run_dense(circuit);
  double max_delta = 0.0;
  double matched_mass = 0.0;
  for (std::size_t e = 0; e < state.size(); ++e) {
    const std::uint64_t index = state.key_low_bits(e, 64);
    const double delta = std::abs(dense.amplitude(index) - state.amplitude(e));
    if (delta > max_delta) max_delta = delta;
    matched_mass += std::norm(dense.amplitude(index));
  }
  check.max_amplitude_delta = max_delta;
  // All dense mass must sit on the sparse keys; anything left over means the
  // engines disagree about which basis states are populated.
  check.agrees = max_delta <= 1e-12 && std::abs(matched_mass - dense.norm_squared()) <= 1e-9;
  return check;
}

}  // namespace

PipelineResult run_pipeline(const Formula& f, const PipelineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  validate(f);
  if (f.num_vars > options.max_vars) {
    throw CapExceeded("formula has " + std::to_string(f.num_vars) +
                      " variables, branch cap is " + std::to_string(options.max_vars));
  }

  PipelineResult result;
  result.artifact =
      f.clauses.empty() ? trivially_true_artifact(f.num_vars) : compile(f);
  const Circuit& circuit = result.artifact.circuit;
  const QubitLayout& layout = circuit.layout;

  SparseState state = prepare(layout, options.qubit_cap);
  state = apply_hadamard_layer(std::move(state), layout);
  state = apply_circuit(std::move(state), circuit, options.norm_check);

  result.expectation_e = measure_projection_e(state);
  result.polarized = apply_v_theta(state, layout, options.theta);
  result.verdict = decide(result.polarized);
  result.complexity = make_report(f, result.artifact);

  if (options.v_theta_literal) {
    result.literal = v_theta_literal(state, options.theta);
  }
  if (options.dense_check) {
    result.dense = cross_check_dense(state, circuit);
  }
  if (options.run_oracle && f.num_vars <= options.oracle_max_vars) {
    const long long count = brute_force_count(f, options.oracle_max_vars);
    result.oracle_count = count;
    result.oracle_agrees = count == result.verdict.model_count &&
                           (count >= 1) == result.verdict.satisfiable;
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  result.wall_seconds = std::chrono::duration<double>(elapsed).count();
  return result;
}

}  // namespace qsat
