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

#include <numbers>
#include <optional>

#include "qsat/analysis.hpp"
#include "qsat/compiler.hpp"
#include "qsat/formula.hpp"
#include "qsat/simulator.hpp"

namespace qsat {

struct PipelineOptions {
  double theta = std::numbers::pi / 4;
  int max_vars = kDefaultMaxVars;  // branch cap: the state holds 2^n entries
  std::size_t qubit_cap = kDefaultQubitCap;
  bool run_oracle = true;  // brute-force cross-check when n <= oracle_max_vars
  int oracle_max_vars = kDefaultOracleMaxVars;
  bool dense_check = false;  // dense-engine cross-check when q <= 22
  bool v_theta_literal = false;
  NormCheck norm_check = NormCheck::PerGate;
};

struct DenseCheckResult {
  bool ran = false;
  int qubits = 0;
  bool agrees = false;
  double max_amplitude_delta = 0.0;
};

struct PipelineResult {
  Verdict verdict;
  PolarizedResult polarized;
  double expectation_e = 0.0;  // <v_f|E|v_f>, before polarization
  CompilationArtifact artifact;
  ComplexityReport complexity;
  std::optional<long long> oracle_count;  // set when the oracle ran
  bool oracle_agrees = true;              // meaningful when oracle_count is set
  std::optional<DenseCheckResult> dense;
  std::optional<VThetaLiteral> literal;
  double wall_seconds = 0.0;
};

/// Full decision pipeline: compile (or the trivial forced-true circuit when
/// m = 0), prepare, Hadamard layer, run the circuit, measure the projection,
/// polarize, decide, and cross-check against the classical oracle. Throws
/// CapExceeded when num_vars > max_vars or the register exceeds qubit_cap, and
/// std::invalid_argument on an invalid formula.
PipelineResult run_pipeline(const Formula& f, const PipelineOptions& options = {});

}  // namespace qsat
