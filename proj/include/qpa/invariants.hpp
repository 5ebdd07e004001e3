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

#ifndef QPA_INVARIANTS_HPP_
#define QPA_INVARIANTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qpa/normal_forms.hpp"

namespace qpa {

/// S[u][v] = dim((e_u J e_v + J^2)/J^2) for J the irrelevant ideal. Bounded
/// entrywise by the adjacency matrix; equal to it for pruned presentations.
struct TangentDim {
  NatMatrix matrix;
};

TangentDim tangent_dimension(const TruncatedGB& gb);

/// Basis of the degree-1 part of the center: the z in A_1 commuting with all
/// trivial idempotents and all arrows. Commutation against idempotents and
/// arrows suffices: they generate A as an algebra, and an element commuting
/// with a generating set commutes with everything.
std::vector<PathPoly> central_degree_one(const TruncatedGB& gb);

enum class Verdict { NonIsomorphic, Candidates, Isomorphic };

std::string verdict_name(Verdict v);

/// A recheckable reason for a NonIsomorphic verdict.
struct FailedInvariant {
  enum class Kind { VertexCount, AdjacencyConjugacy, DimensionMatrix, SearchExhausted };
  Kind kind;
  int degree = -1;                 // for DimensionMatrix
  NatMatrix lhs, rhs;              // the two matrices that no permutation conjugates
  std::uint64_t maps_tried = 0;    // for SearchExhausted
  std::size_t sigmas_tried = 0;
  std::string describe() const;
};

struct GradedMap;  // iso_search.hpp

/// Outcome of a screen or search: a definite negative with witness, a set of
/// admissible vertex permutations, or an isomorphism with its graded witness.
struct IsoCertificate {
  Verdict verdict;
  std::optional<FailedInvariant> failed;
  std::vector<Permutation> candidates;
  std::shared_ptr<const GradedMap> witness;  // set iff verdict == Isomorphic
};

/// Necessary-condition screen: vertex counts, adjacency conjugacy, and
/// simultaneous conjugacy of every dimension matrix up to max_degree. Returns
/// NonIsomorphic with a witness, or Candidates with exactly the permutations
/// passing all screens.
IsoCertificate iso_necessary(const TruncatedGB& gb_a, const TruncatedGB& gb_b, int max_degree);

}  // namespace qpa

#endif  // QPA_INVARIANTS_HPP_
