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

#ifndef QPA_ISO_SEARCH_HPP_
#define QPA_ISO_SEARCH_HPP_

#include <optional>

#include "qpa/invariants.hpp"
#include "qpa/linalg.hpp"

namespace qpa {

/// A degree-1 block-structured map between path algebras: a vertex
/// permutation sigma plus, per vertex pair (u,v), a square scalar matrix
/// sending the k-th arrow u->v of the source quiver to a combination of the
/// arrows sigma(u)->sigma(v) of the target quiver.
struct GradedMap {
  QuiverPtr source;
  QuiverPtr target;
  Field field;
  Permutation sigma;
  std::vector<std::vector<ScalarMatrix>> blocks;  // [u][v], size M[u][v]

  static GradedMap identity(QuiverPtr q, Field f);

  bool blocks_invertible() const;
  std::optional<GradedMap> inverse() const;
  std::string str() const;
};

/// e_u -> e_{sigma(u)}, arrows to their block images, extended
/// multiplicatively and linearly. Preserves length, source class, and target
/// class. The input lives in the source free algebra kQ.
PathPoly apply_graded_map(const GradedMap& phi, const PathPoly& f);

/// True iff every block is invertible, phi kills every generator of A's
/// ideal modulo B's, and the blockwise inverse kills every generator of B's
/// ideal modulo A's.
bool is_graded_isomorphism(const GradedMap& phi, const TruncatedGB& gb_a, const TruncatedGB& gb_b);

struct SearchStrategy {
  enum class Kind {
    ExhaustiveFiniteField,  // complete over F_p; may conclude non-isomorphic
    Monomial,               // scalings x arrow permutations within blocks
    SymbolicDiagonal        // solve scalar constraints; blocks of size <= 1
  };
  Kind kind = Kind::ExhaustiveFiniteField;

  static SearchStrategy exhaustive() { return {Kind::ExhaustiveFiniteField}; }
  static SearchStrategy monomial() { return {Kind::Monomial}; }
  static SearchStrategy diagonal() { return {Kind::SymbolicDiagonal}; }

  bool is_complete() const { return kind == Kind::ExhaustiveFiniteField; }
};

struct SearchOptions {
  int jobs = 1;
  bool deterministic = true;  // report the lexicographically least witness
};

/// Decides graded isomorphism by searching block-structured degree-1 maps
/// over the admissible vertex permutations. Runs the necessary-condition
/// screen first. Exhaustive strategies decide; incomplete strategies
/// downgrade a miss to Candidates.
IsoCertificate search_graded_iso(const TruncatedGB& gb_a, const TruncatedGB& gb_b,
                                 SearchStrategy strategy, SearchOptions options = {});

/// The presentation of A[t]: one loop t_v per vertex and the relations
/// t_u*a - a*t_v for every arrow a: u->v. Adjacency becomes M_Q + I_n.
struct PolynomialExtension {
  QuiverPtr quiver;
  HomogeneousIdeal ideal;
};

PolynomialExtension polynomial_extension(const TruncatedGB& gb);

}  // namespace qpa

#endif  // QPA_ISO_SEARCH_HPP_
