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

#ifndef QPA_QUIVER_HPP_
#define QPA_QUIVER_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qpa/field.hpp"

namespace qpa {

/// Natural-number matrix (adjacency matrices, dimension matrices).
using NatMatrix = std::vector<std::vector<std::uint64_t>>;

NatMatrix nat_identity(std::size_t n);
NatMatrix nat_mul(const NatMatrix& a, const NatMatrix& b);
NatMatrix nat_pow(const NatMatrix& m, unsigned e);

struct Arrow {
  std::string id;
  int source;  // dense vertex index
  int target;
};

/// A bijection on {0..n-1}. images[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  std::string str() const;

 private:
  std::vector<int> images_;
};

/// A finite multidigraph. Vertices and arrows carry user-visible string ids;
/// internally both are dense indices in declaration order, and all matrices
/// are indexed by the dense vertex index.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertex_ids,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  int vertex_index(const std::string& id) const;  // InputError if unknown

  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_index(const std::string& id) const;

  /// Arrows from u to v, in declaration order.
  const std::vector<int>& arrows_between(int u, int v) const;
  std::vector<int> loops() const;

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::vector<int>>> between_;  // [u][v] -> arrow indices
};

using QuiverPtr = std::shared_ptr<const Quiver>;

QuiverPtr make_quiver(std::vector<std::string> vertex_ids,
                      std::vector<std::tuple<std::string, std::string, std::string>> arrows);

NatMatrix adjacency_matrix(const Quiver& q);

/// (M_Q^l)[u][v]: the number of length-l paths from u to v.
std::uint64_t path_count(const Quiver& q, int u, int v, unsigned len);
std::uint64_t path_count(const Quiver& q, const std::string& u, const std::string& v, unsigned len);

/// Renames vertex i to position sigma(i); arrows keep their ids and
/// declaration order. Satisfies M_relabeled = P M P^-1.
QuiverPtr relabel(const Quiver& q, const Permutation& sigma);

NatMatrix conjugate(const NatMatrix& m, const Permutation& sigma);

/// All sigma with N = P M P^-1, in lexicographic order. Empty when the sizes
/// differ or no conjugator exists. Prunes by row/column-sum and diagonal
/// multisets before enumerating.
std::vector<Permutation> conjugacy_permutations(const NatMatrix& m, const NatMatrix& n);

}  // namespace qpa

#endif  // QPA_QUIVER_HPP_
