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

#include <complex>
#include <cstddef>

#include "qsat/circuit.hpp"
#include "qsat/sparse_state.hpp"

namespace qsat {

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kCountRoundTolerance = 1e-6;
inline constexpr std::size_t kDefaultQubitCap = 4096;
inline constexpr int kDefaultMaxVars = 24;

/// Result-qubit factor of the polarized state: alpha|0> + beta e^{i theta}|1>
/// after branch merging, plus the model count it encodes.
struct PolarizedResult {
  double alpha = 1.0;
  double beta = 0.0;
  double theta = 0.0;
  long long satisfying_count = 0;

  /// Builds the triple from the result-bit projection expectation e = s/2^n.
  /// Throws std::logic_error when e * 2^n is farther than kCountRoundTolerance
  /// from an integer.
  static PolarizedResult from_projection(double e, int num_vars, double theta);
};

struct Verdict {
  bool satisfiable = false;
  long long model_count = 0;
};

enum class NormCheck {
  PerGate,   // recompute and assert the norm after every gate
  EndsOnly,  // assert once after the last gate
};

/// |0...0> on the layout's full register. Throws CapExceeded when the total
/// qubit count exceeds qubit_cap.
SparseState prepare(const QubitLayout& layout, std::size_t qubit_cap = kDefaultQubitCap);

/// Hadamard on every variable qubit of the freshly prepared state: 2^n entries
/// of amplitude 1/sqrt(2^n), dust and result bits zero, keys in increasing
/// assignment order. Throws std::invalid_argument unless the input is the
/// single-entry initial state.
SparseState apply_hadamard_layer(SparseState state, const QubitLayout& layout);

/// Runs every gate as an in-place basis-index relabeling: amplitudes are
/// untouched, the entry count is constant, and the norm is conserved. Asserts
/// the entry count stays <= 2^num_vars after every gate and checks the norm
/// per the NormCheck mode (tolerance kNormTolerance).
SparseState apply_circuit(SparseState state, const Circuit& circuit,
                          NormCheck check = NormCheck::PerGate);

/// Expectation of the result-bit projection: sum of |amplitude|^2 over entries
/// whose result qubit (always the last one) reads 1. Equals s/2^n on the
/// pipeline state, s = satisfying-assignment count.
double measure_projection_e(const SparseState& state);

/// Polarization summary of the post-circuit state: merging the variable/dust
/// registers leaves the result qubit in alpha|0> + beta e^{i theta}|1> with
/// beta = sqrt(s/2^n), alpha = sqrt(1 - s/2^n).
PolarizedResult apply_v_theta(const SparseState& state, const QubitLayout& layout, double theta);

/// Satisfiable iff the recovered model count round(beta^2 * 2^n) is >= 1.
Verdict decide(const PolarizedResult& result);

/// Literal (unnormalized) application of the polarization operator, for
/// inspection: each of the first n+l qubits collapses every branch onto
/// (|0>+|1>)/sqrt(2), so the output is that uniform factor tensored with
/// zero_coeff|0> + one_coeff|1>, where zero_coeff sums the f=0 branch
/// amplitudes and one_coeff the phased f=1 ones. The printed operator is not
/// unitary, so norm_squared is generally not 1.
struct VThetaLiteral {
  std::complex<double> zero_coeff;
  std::complex<double> one_coeff;
  double norm_squared = 0.0;
};

VThetaLiteral v_theta_literal(const SparseState& state, double theta);

}  // namespace qsat
