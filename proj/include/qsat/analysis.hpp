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

#include "qsat/compiler.hpp"
#include "qsat/formula.hpp"

namespace qsat {

/// Input size: ceil(log2 n) + 2mn. The log base is a convention choice; base 2
/// is used throughout and reported as such.
long long input_size_count(int n, long long m);

/// Upper bound on dust qubits for any synthesis in the counting regime
/// (every clause at most n literals): 4mn - 1. Requires m >= 1.
long long dust_bit_bound(int n, long long m);

/// Upper bound on gate steps, counting each NOT/CNOT/CCNOT as one:
/// 1 + 3mn + 4m(2n-1) + m - 1 = 11mn - 3m. Requires m >= 1.
long long gate_step_bound(int n, long long m);

/// Analytic bounds next to the compiler's actual resource usage.
struct ComplexityReport {
  int num_vars = 0;
  long long num_clauses = 0;
  long long input_size = 0;
  bool bounds_defined = false;  // dust/step bounds need m >= 1
  long long dust_bound = 0;
  long long step_bound = 0;
  long long actual_dust = 0;
  long long actual_gates = 0;
  bool in_counting_regime = true;  // every clause has at most n literals
  // actual_dust <= dust_bound && actual_gates <= step_bound; only meaningful
  // when bounds_defined && in_counting_regime.
  bool within_bounds = false;
};

ComplexityReport make_report(const Formula& f, const CompilationArtifact& artifact);

}  // namespace qsat
