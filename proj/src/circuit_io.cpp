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

#include "qsat/circuit_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "qsat/errors.hpp"

namespace qsat {

namespace {

bool parse_index(const std::string& token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && out >= 0;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.layout.total() << " vars " << c.layout.num_vars << " dust "
      << c.layout.num_dust << '\n';
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Not:
        out << "x " << g.target << '\n';
        break;
      case GateKind::Cnot:
        out << "cx " << g.control0 << ' ' << g.target << '\n';
        break;
      case GateKind::Ccnot:
        out << "ccx " << g.control0 << ' ' << g.control1 << ' ' << g.target << '\n';
        break;
    }
  }
  return out.str();
}

Circuit parse_circuit(std::istream& in) {
  Circuit circuit;
  bool have_header = false;
  int line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (!have_header) {
      int q = 0, n = 0, l = 0;
      if (tokens.size() != 6 || tokens[0] != "qubits" || tokens[2] != "vars" ||
          tokens[4] != "dust" || !parse_index(tokens[1], q) || !parse_index(tokens[3], n) ||
          !parse_index(tokens[5], l)) {
        throw ParseError(line_no, "malformed header, expected 'qubits <q> vars <n> dust <l>'");
      }
      if (n < 1) throw ParseError(line_no, "at least one variable qubit required");
      if (q != n + l + 1) {
        throw ParseError(line_no, "qubit total " + std::to_string(q) + " != vars + dust + 1 = " +
                                      std::to_string(n + l + 1));
      }
      circuit.layout = QubitLayout{n, l};
      have_header = true;
      continue;
    }

    Gate gate;
    std::vector<int> indices(tokens.size() - 1);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!parse_index(tokens[i], indices[i - 1])) {
        throw ParseError(line_no, "expected a qubit index, got '" + tokens[i] + "'");
      }
    }
    if (tokens[0] == "x" && indices.size() == 1) {
      gate = Gate::x(indices[0]);
    } else if (tokens[0] == "cx" && indices.size() == 2) {
      gate = Gate::cx(indices[0], indices[1]);
    } else if (tokens[0] == "ccx" && indices.size() == 3) {
      gate = Gate::ccx(indices[0], indices[1], indices[2]);
    } else {
      throw ParseError(line_no, "unrecognized gate line '" + line + "'");
    }

    try {
      validate(gate, circuit.layout.total());
      if (gate.kind != GateKind::Not && circuit.layout.is_variable(gate.target)) {
        throw std::invalid_argument("controlled gate targets variable qubit " +
                                    std::to_string(gate.target));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    circuit.gates.push_back(gate);
  }

  if (!have_header) {
    throw ParseError(line_no == 0 ? 1 : line_no, "missing circuit header");
  }
  return circuit;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

}  // namespace qsat
