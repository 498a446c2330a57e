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

#include "qsat/dense.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qsat/errors.hpp"

namespace qsat {

DenseState::DenseState(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw CapExceeded("dense engine supports 1.." + std::to_string(kMaxQubits) +
                      " qubits, got " + std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, std::complex<double>{0.0, 0.0});
  amps_[0] = std::complex<double>{1.0, 0.0};
}

void DenseState::apply_hadamard(int qubit) {
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    const std::complex<double> a = amps_[i];
    const std::complex<double> b = amps_[i | mask];
    amps_[i] = (a + b) * inv_sqrt2;
    amps_[i | mask] = (a - b) * inv_sqrt2;
  }
}

void DenseState::apply_gate(const Gate& g) {
  const std::uint64_t target_mask = std::uint64_t{1} << g.target;
  std::uint64_t control_mask = 0;
  if (g.control0 >= 0) control_mask |= std::uint64_t{1} << g.control0;
  if (g.control1 >= 0) control_mask |= std::uint64_t{1} << g.control1;

  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & target_mask) || (i & control_mask) != control_mask) continue;
    std::swap(amps_[i], amps_[i | target_mask]);
  }
}

double DenseState::norm_squared() const {
  double sum = 0.0;
  for (const std::complex<double>& amp : amps_) sum += std::norm(amp);
  return sum;
}

double DenseState::projection_result_one() const {
  const std::uint64_t result_mask = std::uint64_t{1} << (num_qubits_ - 1);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & result_mask) sum += std::norm(amps_[i]);
  }
  return sum;
}

DenseState run_dense(const Circuit& circuit) {
  DenseState state(circuit.layout.total());
  for (int qubit = 0; qubit < circuit.layout.num_vars; ++qubit) {
    state.apply_hadamard(qubit);
  }
  for (const Gate& g : circuit.gates) {
    state.apply_gate(g);
  }
  return state;
}

}  // namespace qsat
