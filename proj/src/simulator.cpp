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

#include "qsat/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsat/errors.hpp"

namespace qsat {

namespace {

void check_norm(const SparseState& state) {
  const double norm = state.norm_squared();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::logic_error("norm drifted to " + std::to_string(norm));
  }
}

// Kahan-compensated accumulator for |amplitude|^2 sums.
struct Accumulator {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double term) {
    const double y = term - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

PolarizedResult PolarizedResult::from_projection(double e, int num_vars, double theta) {
  if (e < 0.0) e = 0.0;
  if (e > 1.0) e = 1.0;
  const double scaled = e * static_cast<double>(std::uint64_t{1} << num_vars);
  const long long count = std::llround(scaled);
  if (std::abs(scaled - static_cast<double>(count)) > kCountRoundTolerance) {
    throw std::logic_error("projection " + std::to_string(e) +
                           " is not an integer multiple of 2^-" + std::to_string(num_vars));
  }
  PolarizedResult result;
  result.alpha = std::sqrt(1.0 - e);
  result.beta = std::sqrt(e);
  result.theta = theta;
  result.satisfying_count = count;
  return result;
}

SparseState prepare(const QubitLayout& layout, std::size_t qubit_cap) {
  if (layout.num_vars < 1 || layout.num_dust < 0) {
    throw std::invalid_argument("invalid qubit layout");
  }
  const std::size_t q = static_cast<std::size_t>(layout.total());
  if (q > qubit_cap) {
    throw CapExceeded("register needs " + std::to_string(q) + " qubits, cap is " +
                      std::to_string(qubit_cap));
  }
  SparseState state(layout.total());
  state.append(std::uint64_t{0}, std::complex<double>{1.0, 0.0});
  return state;
}

SparseState apply_hadamard_layer(SparseState state, const QubitLayout& layout) {
  if (state.num_qubits() != layout.total()) {
    throw std::invalid_argument("state does not match layout");
  }
  bool fresh = state.size() == 1 &&
               std::abs(state.amplitude(0) - std::complex<double>{1.0, 0.0}) < 1e-12;
  if (fresh) {
    for (const std::uint64_t word : state.key(0)) fresh = fresh && word == 0;
  }
  if (!fresh) {
    throw std::invalid_argument("Hadamard layer expects the fresh initial state");
  }
  const int n = layout.num_vars;
  if (n > 30) {
    throw CapExceeded("branch table for " + std::to_string(n) + " variables is too large");
  }

  const std::uint64_t branches = std::uint64_t{1} << n;
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(branches));
  SparseState out(state.num_qubits());
  out.reserve(branches);
  for (std::uint64_t assignment = 0; assignment < branches; ++assignment) {
    out.append(assignment, std::complex<double>{amplitude, 0.0});
  }
  return out;
}

SparseState apply_circuit(SparseState state, const Circuit& circuit, NormCheck check) {
  if (state.num_qubits() != circuit.layout.total()) {
    throw std::invalid_argument("state does not match circuit layout");
  }
  const std::size_t branch_cap = circuit.layout.num_vars >= 63
                                     ? ~std::size_t{0}
                                     : std::size_t{1} << circuit.layout.num_vars;

  const std::size_t entries = state.size();
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::Not:
        for (std::size_t e = 0; e < entries; ++e) state.flip_key_bit(e, g.target);
        break;
      case GateKind::Cnot:
        for (std::size_t e = 0; e < entries; ++e) {
          if (state.key_bit(e, g.control0)) state.flip_key_bit(e, g.target);
        }
        break;
      case GateKind::Ccnot:
        for (std::size_t e = 0; e < entries; ++e) {
          if (state.key_bit(e, g.control0) && state.key_bit(e, g.control1)) {
            state.flip_key_bit(e, g.target);
          }
        }
        break;
    }
    if (state.size() > branch_cap) {
      throw std::logic_error("sparsity bound violated: " + std::to_string(state.size()) +
                             " entries");
    }
    if (check == NormCheck::PerGate) check_norm(state);
  }
  if (check == NormCheck::EndsOnly) check_norm(state);
  return state;
}

double measure_projection_e(const SparseState& state) {
  const int result_qubit = state.num_qubits() - 1;
  Accumulator acc;
  for (std::size_t e = 0; e < state.size(); ++e) {
    if (state.key_bit(e, result_qubit)) {
      const std::complex<double> amp = state.amplitude(e);
      acc.add(amp.real() * amp.real() + amp.imag() * amp.imag());
    }
  }
  return acc.sum;
}

PolarizedResult apply_v_theta(const SparseState& state, const QubitLayout& layout, double theta) {
  if (state.num_qubits() != layout.total()) {
    throw std::invalid_argument("state does not match layout");
  }
  return PolarizedResult::from_projection(measure_projection_e(state), layout.num_vars, theta);
}

Verdict decide(const PolarizedResult& result) {
  return Verdict{result.satisfying_count >= 1, result.satisfying_count};
}

VThetaLiteral v_theta_literal(const SparseState& state, double theta) {
  const int result_qubit = state.num_qubits() - 1;
  std::complex<double> zero_sum{0.0, 0.0};
  std::complex<double> one_sum{0.0, 0.0};
  for (std::size_t e = 0; e < state.size(); ++e) {
    if (state.key_bit(e, result_qubit)) {
      one_sum += state.amplitude(e);
    } else {
      zero_sum += state.amplitude(e);
    }
  }
  VThetaLiteral literal;
  literal.zero_coeff = zero_sum;
  literal.one_coeff = std::polar(1.0, theta) * one_sum;
  literal.norm_squared = std::norm(literal.zero_coeff) + std::norm(literal.one_coeff);
  return literal;
}

}  // namespace qsat
