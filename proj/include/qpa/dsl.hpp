// Copyright 2026 The qpa authors.
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

#ifndef QPA_DSL_HPP_
#define QPA_DSL_HPP_

#include <string>
#include <vector>

#include "qpa/normal_forms.hpp"

namespace qpa {

/// Syntax or semantic error in a .qv file, with a source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

/// A parsed .qv file.
///
///   quiver NAME {
///     vertices: u, v;
///     arrows: a: u -> u, d: u -> v;
///     field: F5;              # optional; Q when absent
///     relations: a*d - 2*d*b; # optional; e_IDENT denotes a trivial path
///   }
///
/// Paths compose left to right: a*d traverses a, then d.
struct QuiverSource {
  std::string name;
  std::string raw;
  QuiverPtr quiver;
  Field field;               // declared field, or Q
  bool field_declared = false;
  std::vector<PathPoly> relations;  // over `field`, each homogeneous

  /// The same relations rebuilt over another field (CLI --field override).
  std::vector<PathPoly> relations_over(Field f) const;

  struct TermAst {
    Rational coeff;
    bool trivial = false;
    std::string vertex;                         // for trivial terms
    std::vector<std::string> arrows;            // for path terms
    int line = 0, col = 0;                      // start of the term
    std::vector<std::pair<int, int>> arrow_pos; // per arrow token
  };
  std::vector<std::vector<TermAst>> relation_asts;
};

QuiverSource parse_quiver(const std::string& text);

/// Canonical form: declaration order for vertices and arrows, monomial order
/// (leading term first) within relations. parse(print(parse(t))) == parse(t).
std::string print_quiver(const std::string& name, const Quiver& q, Field field,
                         const std::vector<PathPoly>& relations, bool with_field = true);
std::string print_quiver(const QuiverSource& src);

}  // namespace qpa

#endif  // QPA_DSL_HPP_
