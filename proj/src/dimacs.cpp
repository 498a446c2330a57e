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

#include "qsat/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "qsat/errors.hpp"

namespace qsat {

namespace {

bool parse_int(const std::string& token, long long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

Formula parse_dimacs(std::istream& in) {
  Formula formula;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<Literal> current;
  std::unordered_set<int> current_set;  // signed literal encoding for dup checks
  int current_clause_line = 0;  // line the open clause started on
  int line_no = 0;
  bool trailer = false;

  std::string line;
  while (!trailer && std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') {
      trailer = true;
      break;
    }

    if (line[first] == 'p') {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      const auto tokens = split_tokens(line);
      long long n = 0;
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf" ||
          !parse_int(tokens[2], n) || !parse_int(tokens[3], declared_clauses)) {
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      if (n < 1 || n > 1'000'000) {
        throw ParseError(line_no, "variable count must be in 1..1000000, got " +
                                      tokens[2]);
      }
      if (declared_clauses < 0) {
        throw ParseError(line_no, "clause count must be >= 0, got " + tokens[3]);
      }
      formula.num_vars = static_cast<int>(n);
      have_header = true;
      continue;
    }

    if (!have_header) {
      throw ParseError(line_no, "clause data before 'p cnf' header");
    }

    for (const std::string& token : split_tokens(line)) {
      long long value = 0;
      if (!parse_int(token, value)) {
        throw ParseError(line_no, "expected an integer, got '" + token + "'");
      }
      if (value == 0) {
        if (token[0] == '-') {
          throw ParseError(line_no, "zero variable index '" + token + "'");
        }
        if (current.empty()) {
          throw ParseError(line_no, "empty clause");
        }
        if (static_cast<long long>(formula.clauses.size()) == declared_clauses) {
          throw ParseError(line_no, "more clauses than the header's " +
                                        std::to_string(declared_clauses));
        }
        formula.clauses.push_back(Clause{current});
        current.clear();
        current_set.clear();
        continue;
      }
      const long long magnitude = value < 0 ? -value : value;
      if (magnitude > formula.num_vars) {
        throw ParseError(line_no, "literal index " + std::to_string(magnitude) +
                                      " exceeds variable count " +
                                      std::to_string(formula.num_vars));
      }
      if (current.empty()) current_clause_line = line_no;
      if (!current_set.insert(static_cast<int>(value)).second) {
        throw ParseError(line_no, "duplicate literal '" + token + "' in clause");
      }
      current.push_back(Literal{static_cast<int>(magnitude), value < 0});
    }
  }

  if (!have_header) {
    throw ParseError(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
  }
  if (!current.empty()) {
    throw ParseError(current_clause_line, "clause not terminated by 0");
  }
  if (static_cast<long long>(formula.clauses.size()) != declared_clauses) {
    throw ParseError(line_no == 0 ? 1 : line_no,
                     "header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(formula.clauses.size()));
  }
  validate(formula);
  return formula;
}

Formula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string to_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& clause : f.clauses) {
    for (const Literal& lit : clause.literals) {
      if (lit.negated) out << '-';
      out << lit.variable << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

}  // namespace qsat
