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
#include <cstdint>
#include <vector>

#include "qsat/circuit.hpp"

namespace qsat {

/// Full 2^q state vector for cross-checking the sparse engine on small
/// instances. Gate application is an independent swap-loop implementation; it
/// shares nothing with gate_permutation or SparseState.
class DenseState {
 public:
  static constexpr int kMaxQubits = 22;

  /// |0...0>. Throws CapExceeded when num_qubits > kMaxQubits.
  explicit DenseState(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }

  void apply_hadamard(int qubit);
  void apply_gate(const Gate& g);

  std::complex<double> amplitude(std::uint64_t index) const { return amps_[index]; }
  double norm_squared() const;

  /// Sum of |amplitude|^2 over indices whose last qubit reads 1.
  double projection_result_one() const;

 private:
  int num_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Prepares |0...0>, applies the Hadamard layer to the variable qubits, then
/// runs the circuit. Mirrors the sparse pipeline up to measurement.
DenseState run_dense(const Circuit& circuit);

}  // namespace qsat
