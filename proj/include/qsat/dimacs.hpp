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

#include <iosfwd>
#include <string>

#include "qsat/formula.hpp"

namespace qsat {

/// Parses DIMACS CNF text: optional `c` comment lines, one `p cnf <n> <m>`
/// header, then m clauses of nonzero integers each terminated by 0 (negative
/// integer = negated literal). Clauses may span lines and share lines. A `%`
/// line ends the input; anything after it is ignored.
///
/// Throws ParseError (with line number) on malformed headers, out-of-range or
/// zero literal indices, empty clauses, duplicate literals, and clause-count
/// mismatches against the header.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);

/// Renders the formula back to DIMACS text; parse_dimacs(to_dimacs(f)) == f.
std::string to_dimacs(const Formula& f);

}  // namespace qsat
