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

#include "qsat/analysis.hpp"

#include <bit>
#include <stdexcept>

namespace qsat {

namespace {

long long ceil_log2(int n) {
  // bit_width(n - 1): 0 for n = 1, 2 for n = 3, 2 for n = 4, 3 for n = 5.
  return std::bit_width(static_cast<unsigned>(n - 1));
}

void require(int n, long long m, long long m_min) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (m < m_min) throw std::invalid_argument("need m >= " + std::to_string(m_min));
}

}  // namespace

long long input_size_count(int n, long long m) {
  require(n, m, 0);
  return ceil_log2(n) + 2 * m * n;
}

long long dust_bit_bound(int n, long long m) {
  require(n, m, 1);
  return 4 * m * n - 1;
}

long long gate_step_bound(int n, long long m) {
  require(n, m, 1);
  return 11 * m * n - 3 * m;
}

ComplexityReport make_report(const Formula& f, const CompilationArtifact& artifact) {
  ComplexityReport report;
  report.num_vars = f.num_vars;
  report.num_clauses = static_cast<long long>(f.clauses.size());
  report.input_size = input_size_count(report.num_vars, report.num_clauses);
  report.actual_dust = artifact.dust_used;
  report.actual_gates = artifact.gate_count;

  for (const Clause& clause : f.clauses) {
    if (static_cast<int>(clause.literals.size()) > f.num_vars) {
      report.in_counting_regime = false;
      break;
    }
  }

  if (report.num_clauses >= 1) {
    report.bounds_defined = true;
    report.dust_bound = dust_bit_bound(report.num_vars, report.num_clauses);
    report.step_bound = gate_step_bound(report.num_vars, report.num_clauses);
    if (report.in_counting_regime) {
      report.within_bounds = report.actual_dust <= report.dust_bound &&
                             report.actual_gates <= report.step_bound;
    }
  }
  return report;
}

}  // namespace qsat
