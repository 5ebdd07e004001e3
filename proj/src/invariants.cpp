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

#include "qpa/invariants.hpp"

#include <map>

#include "qpa/linalg.hpp"

namespace qpa {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NonIsomorphic: return "non-isomorphic";
    case Verdict::Candidates: return "candidates";
    case Verdict::Isomorphic: return "isomorphic";
  }
  return "?";
}

std::string FailedInvariant::describe() const {
  switch (kind) {
    case Kind::VertexCount:
      return "vertex counts differ: " + std::to_string(lhs.size()) + " vs " +
             std::to_string(rhs.size());
    case Kind::AdjacencyConjugacy:
      return "no permutation conjugates the adjacency matrices";
    case Kind::DimensionMatrix:
      return "no permutation conjugates the dimension matrices at degree " +
             std::to_string(degree);
    case Kind::SearchExhausted:
      return "exhaustive search: " + std::to_string(sigmas_tried) + " permutation(s), " +
             std::to_string(maps_tried) + " graded map(s) tried, none is an isomorphism";
  }
  return "?";
}

TangentDim tangent_dimension(const TruncatedGB& gb) {
  if (!gb.is_pruned())
    throw InputError("tangent dimension requires a pruned ideal; run prune_low_degree first");
  if (gb.complete_upto() < 2)
    throw TruncationError("tangent dimension needs certification to degree 2", gb.complete_upto());
  NatMatrix adj = adjacency_matrix(*gb.quiver());
  std::size_t n = gb.quiver()->vertex_count();
  // Degree-1 part of A_+/A_+^2 blockwise; A_+^2 starts in degree 2, so this
  // is dim (A_1)_{uv}.
  NatMatrix s(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      s[u][v] = gb.monomial_basis(1, static_cast<int>(u), static_cast<int>(v)).size();
      if (s[u][v] > adj[u][v])
        throw InputError("tangent dimension exceeds the adjacency matrix; corrupt basis");
    }
  return TangentDim{std::move(s)};
}

std::vector<PathPoly> central_degree_one(const TruncatedGB& gb) {
  if (gb.complete_upto() < 2)
    throw TruncationError("degree-1 center needs certification to degree 2", gb.complete_upto());
  const QuiverPtr& q = gb.quiver();
  Field f = gb.field();
  // z commuting with every e_u is supported on loops.
  std::vector<int> loops = q->loops();
  if (loops.empty()) return {};

  // Row per (arrow, degree-2 normal monomial), column per loop coefficient.
  std::map<std::pair<int, std::vector<int>>, std::size_t> row_index;
  std::vector<std::vector<Scalar>> rows;
  auto row_of = [&](int arrow, const Path& mono) -> std::vector<Scalar>& {
    auto key = std::make_pair(arrow, mono.arrow_indices());
    auto it = row_index.find(key);
    if (it == row_index.end()) {
      it = row_index.emplace(key, rows.size()).first;
      rows.emplace_back(loops.size(), Scalar::zero(f));
    }
    return rows[it->second];
  };

  for (std::size_t li = 0; li < loops.size(); ++li) {
    PathPoly loop_poly = PathPoly::of_path(q, f, Path::of_arrows(q, {loops[li]}));
    for (int a = 0; a < static_cast<int>(q->arrow_count()); ++a) {
      PathPoly arrow_poly = PathPoly::of_path(q, f, Path::of_arrows(q, {a}));
      PathPoly comm = gb.normal_form(poly_mul(loop_poly, arrow_poly) -
                                     poly_mul(arrow_poly, loop_poly));
      for (const auto& [mono, c] : comm.terms()) row_of(a, mono)[li] = c;
    }
  }

  ScalarMatrix system(rows.size(), loops.size(), f);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < loops.size(); ++c) system.at(r, c) = rows[r][c];

  std::vector<PathPoly> basis;
  for (const auto& v : system.nullspace_basis()) {
    PathPoly z(q, f);
    for (std::size_t li = 0; li < loops.size(); ++li)
      z.add_term(Path::of_arrows(q, {loops[li]}), v[li]);
    basis.push_back(std::move(z));
  }
  return basis;
}

IsoCertificate iso_necessary(const TruncatedGB& gb_a, const TruncatedGB& gb_b, int max_degree) {
  if (gb_a.complete_upto() < max_degree || gb_b.complete_upto() < max_degree)
    throw TruncationError("necessary-condition screen needs certification to degree " +
                              std::to_string(max_degree),
                          std::min(gb_a.complete_upto(), gb_b.complete_upto()));
  IsoCertificate cert;
  NatMatrix ma = adjacency_matrix(*gb_a.quiver());
  NatMatrix mb = adjacency_matrix(*gb_b.quiver());
  if (ma.size() != mb.size()) {
    cert.verdict = Verdict::NonIsomorphic;
    cert.failed = FailedInvariant{FailedInvariant::Kind::VertexCount, -1, ma, mb};
    return cert;
  }
  std::vector<Permutation> sigmas = conjugacy_permutations(ma, mb);
  if (sigmas.empty()) {
    cert.verdict = Verdict::NonIsomorphic;
    cert.failed = FailedInvariant{FailedInvariant::Kind::AdjacencyConjugacy, -1, ma, mb};
    return cert;
  }
  DimProfile da = dimension_matrices(gb_a, max_degree);
  DimProfile db = dimension_matrices(gb_b, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Permutation> surviving;
    for (const auto& sigma : sigmas)
      if (conjugate(da.by_degree[d], sigma) == db.by_degree[d]) surviving.push_back(sigma);
    if (surviving.empty()) {
      cert.verdict = Verdict::NonIsomorphic;
      cert.failed =
          FailedInvariant{FailedInvariant::Kind::DimensionMatrix, d, da.by_degree[d], db.by_degree[d]};
      return cert;
    }
    sigmas = std::move(surviving);
  }
  cert.verdict = Verdict::Candidates;
  cert.candidates = std::move(sigmas);
  return cert;
}

}  // namespace qpa
