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

#ifndef QPA_PATH_ALGEBRA_HPP_
#define QPA_PATH_ALGEBRA_HPP_

#include <map>
#include <string>
#include <vector>

#include "qpa/quiver.hpp"

namespace qpa {

/// A path in a quiver: a trivial path e_v or a composable arrow sequence
/// a_0 a_1 ... a_n with s(a_k) = t(a_{k-1}). Composition is left to right:
/// p * q traverses p first, then q.
class Path {
 public:
  static Path trivial(QuiverPtr q, int vertex);
  static Path of_arrows(QuiverPtr q, std::vector<int> arrow_indices);
  static Path of_arrow_ids(QuiverPtr q, const std::vector<std::string>& ids);

  const QuiverPtr& base() const { return base_; }
  bool is_trivial() const { return arrows_.empty(); }
  int length() const { return static_cast<int>(arrows_.size()); }
  int source() const;
  int target() const;
  const std::vector<int>& arrow_indices() const { return arrows_; }

  bool passes_through(int vertex) const;

  /// Term order: length, then source index, then target index, then
  /// left-to-right lexicographic on arrow indices.
  bool operator<(const Path& o) const;
  bool operator==(const Path& o) const;

  std::string str() const;

 private:
  Path(QuiverPtr q, int vertex, std::vector<int> arrows)
      : base_(std::move(q)), vertex_(vertex), arrows_(std::move(arrows)) {}

  QuiverPtr base_;
  int vertex_ = -1;          // for trivial paths
  std::vector<int> arrows_;  // empty iff trivial
};

/// Element of the free path algebra kQ: a finite linear combination of paths
/// with nonzero exact coefficients, kept in canonical term order.
class PathPoly {
 public:
  PathPoly(QuiverPtr q, Field f) : base_(std::move(q)), field_(f) {}

  static PathPoly zero(QuiverPtr q, Field f) { return PathPoly(std::move(q), f); }
  static PathPoly of_path(QuiverPtr q, Field f, const Path& p);
  static PathPoly unit(QuiverPtr q, Field f);  // 1 = sum of all e_v

  const QuiverPtr& base() const { return base_; }
  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Path, Scalar>& terms() const { return terms_; }

  /// Max path length among terms; -1 for the zero element.
  int degree() const;

  void add_term(const Path& p, const Scalar& c);

  PathPoly operator+(const PathPoly& o) const;
  PathPoly operator-(const PathPoly& o) const;
  PathPoly operator*(const PathPoly& o) const;
  PathPoly operator*(const Scalar& c) const;
  PathPoly operator-() const;

  bool operator==(const PathPoly& o) const;

  std::string str() const;

 private:
  void check_compatible(const PathPoly& o) const;

  QuiverPtr base_;
  Field field_;
  std::map<Path, Scalar> terms_;
};

/// p * q as a one-term combination when composable, zero otherwise.
PathPoly concat(const Path& p, const Path& q, Field f);

PathPoly poly_mul(const PathPoly& f, const PathPoly& g);

struct BiComponent {
  int source;
  int target;
  int degree;
  PathPoly part;
};

/// Partition of f by (source, target, length); the parts sum to f.
std::vector<BiComponent> bihomogeneous_components(const PathPoly& f);

/// True iff all terms share length, source, and target (zero is homogeneous).
bool is_homogeneous(const PathPoly& f);

}  // namespace qpa

#endif  // QPA_PATH_ALGEBRA_HPP_
