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

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsat/circuit_io.hpp"
#include "qsat/dense.hpp"
#include "qsat/dimacs.hpp"
#include "qsat/errors.hpp"
#include "qsat/pipeline.hpp"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitError = 1;

struct CliOptions {
  std::string input_path;
  bool use_stdin = false;
  bool json = false;
  std::string emit_circuit_path;
  qsat::PipelineOptions pipeline;
};

nlohmann::json complexity_json(const qsat::ComplexityReport& report) {
  nlohmann::json j{
      {"num_vars", report.num_vars},
      {"num_clauses", report.num_clauses},
      {"input_size", report.input_size},
      {"actual_dust", report.actual_dust},
      {"actual_gates", report.actual_gates},
      {"in_counting_regime", report.in_counting_regime},
      {"log_base", 2},
  };
  if (report.bounds_defined) {
    j["dust_bound"] = report.dust_bound;
    j["step_bound"] = report.step_bound;
    j["within_bounds"] = report.within_bounds;
  } else {
    j["dust_bound"] = nullptr;
    j["step_bound"] = nullptr;
    j["within_bounds"] = nullptr;
  }
  return j;
}

nlohmann::json result_json(const qsat::PipelineResult& result) {
  const auto& layout = result.artifact.circuit.layout;
  nlohmann::json j{
      {"status", "ok"},
      {"verdict", result.verdict.satisfiable ? "SAT" : "UNSAT"},
      {"model_count", result.verdict.model_count},
      {"alpha", result.polarized.alpha},
      {"beta", result.polarized.beta},
      {"beta_squared", result.polarized.beta * result.polarized.beta},
      {"theta", result.polarized.theta},
      {"expectation_e", result.expectation_e},
      {"qubits",
       {{"vars", layout.num_vars},
        {"dust", layout.num_dust},
        {"result", 1},
        {"total", layout.total()}}},
      {"gate_count", result.artifact.gate_count},
      {"complexity", complexity_json(result.complexity)},
      {"wall_time_seconds", result.wall_seconds},
  };
  if (result.oracle_count.has_value()) {
    j["oracle"] = {{"ran", true},
                   {"model_count", *result.oracle_count},
                   {"agrees", result.oracle_agrees}};
  } else {
    j["oracle"] = {{"ran", false}};
  }
  if (result.dense.has_value()) {
    j["dense_check"] = {{"ran", result.dense->ran},
                        {"qubits", result.dense->qubits},
                        {"agrees", result.dense->agrees},
                        {"max_amplitude_delta", result.dense->max_amplitude_delta}};
  }
  if (result.literal.has_value()) {
    j["v_theta_literal"] = {
        {"zero_coeff", {result.literal->zero_coeff.real(), result.literal->zero_coeff.imag()}},
        {"one_coeff", {result.literal->one_coeff.real(), result.literal->one_coeff.imag()}},
        {"norm_squared", result.literal->norm_squared}};
  }
  return j;
}

void print_text(const qsat::PipelineResult& result, std::ostream& out) {
  const auto& layout = result.artifact.circuit.layout;
  const auto& c = result.complexity;
  out << "verdict        " << (result.verdict.satisfiable ? "SAT" : "UNSAT") << '\n';
  out << "model count    " << result.verdict.model_count << '\n';
  out << "beta^2         " << result.polarized.beta * result.polarized.beta << '\n';
  out << "<E>            " << result.expectation_e << '\n';
  out << "alpha          " << result.polarized.alpha << '\n';
  out << "theta          " << result.polarized.theta << '\n';
  out << "qubits         " << layout.num_vars << " vars + " << layout.num_dust
      << " dust + 1 result = " << layout.total() << '\n';
  out << "gates          " << result.artifact.gate_count << '\n';
  out << "complexity     input " << c.input_size;
  if (c.bounds_defined) {
    out << ", dust " << c.actual_dust << "/" << c.dust_bound << ", gates " << c.actual_gates
        << "/" << c.step_bound;
    if (c.in_counting_regime) {
      out << (c.within_bounds ? ", within bounds" : ", OUT OF BOUNDS");
    } else {
      out << ", outside counting regime (a clause has more than n literals)";
    }
  }
  out << '\n';
  if (result.oracle_count.has_value()) {
    out << "oracle         count " << *result.oracle_count
        << (result.oracle_agrees ? ", agrees" : ", DISAGREES") << '\n';
  } else {
    out << "oracle         skipped\n";
  }
  if (result.dense.has_value()) {
    if (result.dense->ran) {
      out << "dense check    " << (result.dense->agrees ? "agrees" : "DISAGREES")
          << " (max amplitude delta " << result.dense->max_amplitude_delta << ")\n";
    } else {
      out << "dense check    skipped (" << result.dense->qubits << " qubits > "
          << qsat::DenseState::kMaxQubits << ")\n";
    }
  }
  if (result.literal.has_value()) {
    out << "V_theta literal  coeff0 (" << result.literal->zero_coeff.real() << ", "
        << result.literal->zero_coeff.imag() << "), coeff1 (" << result.literal->one_coeff.real()
        << ", " << result.literal->one_coeff.imag() << "), norm^2 "
        << result.literal->norm_squared << '\n';
  }
  out << "time           " << result.wall_seconds << " s\n";
}

int report_error(const std::string& message, bool json, std::optional<int> line = {}) {
  if (json) {
    nlohmann::json j{{"status", "error"}, {"verdict", "ERROR"}, {"error", message}};
    if (line.has_value()) j["line"] = *line;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cerr << "error: " << message << '\n';
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decides CNF satisfiability by compiling the formula into a reversible\n"
      "NOT/CNOT/CCNOT circuit, simulating all assignment branches at once with\n"
      "a sparse state vector, and reading the model count off the result qubit."};
  app.name("qsat");

  CliOptions opts;
  app.add_option("input", opts.input_path, "DIMACS CNF file");
  app.add_flag("--stdin", opts.use_stdin, "Read DIMACS from standard input");
  app.add_option("--theta", opts.pipeline.theta,
                 "Polarization phase in radians (default pi/4)");
  app.add_flag("--json", opts.json, "Emit the report as JSON on stdout");
  app.add_option("--emit-circuit", opts.emit_circuit_path,
                 "Write the compiled circuit to this path");
  bool no_oracle = false;
  app.add_flag("--no-oracle", no_oracle, "Skip the brute-force cross-check");
  app.add_flag("--dense-check", opts.pipeline.dense_check,
               "Cross-check against the dense engine (when total qubits <= 22)");
  app.add_option("--max-vars", opts.pipeline.max_vars,
                 "Variable-count cap; the state holds 2^n branches (default 24)");
  app.add_flag("--v-theta-literal", opts.pipeline.v_theta_literal,
               "Also report the literal unnormalized polarization coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  opts.pipeline.run_oracle = !no_oracle;

  if (opts.use_stdin != opts.input_path.empty()) {
    return report_error(opts.use_stdin ? "--stdin conflicts with an input path"
                                       : "need an input path or --stdin",
                        opts.json);
  }

  qsat::Formula formula;
  try {
    if (opts.use_stdin) {
      formula = qsat::parse_dimacs(std::cin);
    } else {
      std::ifstream in(opts.input_path);
      if (!in) {
        return report_error("cannot open '" + opts.input_path + "'", opts.json);
      }
      formula = qsat::parse_dimacs(in);
    }
  } catch (const qsat::ParseError& e) {
    return report_error(e.what(), opts.json, e.line());
  } catch (const std::exception& e) {
    return report_error(e.what(), opts.json);
  }

  try {
    const qsat::PipelineResult result = qsat::run_pipeline(formula, opts.pipeline);

    if (!opts.emit_circuit_path.empty()) {
      std::ofstream out(opts.emit_circuit_path);
      if (!out) {
        return report_error("cannot write '" + opts.emit_circuit_path + "'", opts.json);
      }
      out << qsat::serialize_circuit(result.artifact.circuit);
    }

    if (opts.json) {
      std::cout << result_json(result).dump(2) << '\n';
    } else {
      print_text(result, std::cout);
    }

    // Cross-check failures go to stderr so stdout stays one valid report.
    if (result.oracle_count.has_value() && !result.oracle_agrees) {
      std::cerr << "error: oracle disagrees with the quantum pipeline\n";
      return kExitError;
    }
    if (result.dense.has_value() && result.dense->ran && !result.dense->agrees) {
      std::cerr << "error: dense cross-check disagrees with the sparse engine\n";
      return kExitError;
    }
    return result.verdict.satisfiable ? kExitSat : kExitUnsat;
  } catch (const std::exception& e) {
    return report_error(e.what(), opts.json);
  }
}
