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

#ifndef QPA_NORMAL_FORMS_HPP_
#define QPA_NORMAL_FORMS_HPP_

#include <vector>

#include "qpa/path_algebra.hpp"

namespace qpa {

/// A two-sided ideal of kQ given by homogeneous generators (shared length,
/// source and target per generator).
struct HomogeneousIdeal {
  QuiverPtr quiver;
  Field field;
  std::vector<PathPoly> generators;
};

/// Validates homogeneity of every generator; InputError otherwise.
HomogeneousIdeal make_ideal(QuiverPtr quiver, Field field, std::vector<PathPoly> generators);

/// Result of eliminating degree-0 and degree-1 generators. The quotient
/// algebra is unchanged up to isomorphism; all remaining generators have
/// degree >= 2.
struct PruneResult {
  QuiverPtr quiver;
  HomogeneousIdeal ideal;
  std::vector<std::string> removed_vertices;
  std::vector<std::string> removed_arrows;
};

/// Iterates to a fixpoint: a degree-0 generator alpha*e_v deletes vertex v
/// (with incident arrows and all generator terms through v); a degree-1
/// generator eliminates its leading arrow by substitution into the others.
PruneResult prune_low_degree(QuiverPtr quiver, Field field, std::vector<PathPoly> generators);

/// Degree-truncated reduced Groebner basis of a homogeneous ideal under the
/// order (length, source, target, left-to-right lex on arrow declaration
/// indices). Rewriting is confluent for all inputs of degree at most
/// complete_upto().
class TruncatedGB {
 public:
  static TruncatedGB compute(HomogeneousIdeal ideal, int truncation_degree);

  const HomogeneousIdeal& ideal() const { return ideal_; }
  const QuiverPtr& quiver() const { return ideal_.quiver; }
  Field field() const { return ideal_.field; }
  int truncation_degree() const { return truncation_degree_; }
  int complete_upto() const { return complete_upto_; }
  const std::vector<PathPoly>& elements() const { return elements_; }

  /// True when every generator has degree >= 2.
  bool is_pruned() const;

  /// Confluent remainder of f modulo the ideal. normal_form(f) == 0 iff
  /// f lies in the ideal, for deg(f) <= complete_upto().
  PathPoly normal_form(const PathPoly& f) const;

  /// All irreducible length-n paths from u to v; a basis of (A_n)_{uv}.
  std::vector<Path> monomial_basis(int n, int u, int v) const;

 private:
  TruncatedGB() = default;
  void check_degree(int n, const char* what) const;

  HomogeneousIdeal ideal_;
  int truncation_degree_ = 0;
  int complete_upto_ = 0;
  std::vector<PathPoly> elements_;               // monic, inter-reduced
  std::vector<std::vector<int>> lead_words_;     // arrow-index words of the leads
};

/// Graded dimension matrices: by_degree[n][u][v] = dim (A_n)_{uv}.
struct DimProfile {
  std::vector<NatMatrix> by_degree;
  bool operator==(const DimProfile&) const = default;
};

DimProfile dimension_matrices(const TruncatedGB& gb, int max_degree);

}  // namespace qpa

#endif  // QPA_NORMAL_FORMS_HPP_
