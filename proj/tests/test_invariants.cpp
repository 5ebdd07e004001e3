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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "qpa/invariants.hpp"
#include "test_support.hpp"

using namespace qpa;
using qpa::testing::c_quiver;
using qpa::testing::c_relations;
using qpa::testing::random_deg2_generator;
using qpa::testing::random_quiver;
using qpa::testing::term;

namespace {

const Field kQ = Field::rationals();

QuiverPtr two_loops() { return make_quiver({"w"}, {{"x", "w", "w"}, {"y", "w", "w"}}); }

TruncatedGB gb_of(QuiverPtr q, std::vector<PathPoly> gens, int d = 4) {
  return TruncatedGB::compute(make_ideal(q, kQ, std::move(gens)), d);
}

}  // namespace

TEST_CASE("tangent dimension equals the adjacency matrix on pruned input") {
  CHECK(tangent_dimension(gb_of(c_quiver(), c_relations(c_quiver(), kQ, 1, 1))).matrix ==
        NatMatrix{{1, 1}, {1, 1}});
  CHECK(tangent_dimension(gb_of(two_loops(), {})).matrix == NatMatrix{{2}});
  const QuiverPtr q = two_loops();
  const PathPoly comm = term(q, kQ, 1, {"y", "x"}) - term(q, kQ, 1, {"x", "y"});
  CHECK(tangent_dimension(gb_of(q, {comm})).matrix == NatMatrix{{2}});
}

TEST_CASE("tangent dimension is bounded by adjacency on a random corpus") {
  std::mt19937 rng(31);
  int checked = 0;
  while (checked < 20) {
    const QuiverPtr q = random_quiver(rng, 3, 4);
    const PathPoly gen = random_deg2_generator(rng, q, kQ);
    const TruncatedGB gb = gb_of(q, gen.is_zero() ? std::vector<PathPoly>{}
                                                  : std::vector<PathPoly>{gen});
    ++checked;
    const NatMatrix s = tangent_dimension(gb).matrix;
    const NatMatrix m = adjacency_matrix(*q);
    for (std::size_t u = 0; u < m.size(); ++u)
      for (std::size_t v = 0; v < m.size(); ++v) CHECK(s[u][v] <= m[u][v]);
    CHECK(gb.is_pruned());
    CHECK(s == m);  // pruned presentations attain the bound
  }
}

TEST_CASE("degree-1 center of the free algebra on two loops is trivial") {
  CHECK(central_degree_one(gb_of(two_loops(), {})).empty());
}

TEST_CASE("degree-1 center of the commutative example is everything") {
  const QuiverPtr q = two_loops();
  const PathPoly comm = term(q, kQ, 1, {"y", "x"}) - term(q, kQ, 1, {"x", "y"});
  const TruncatedGB gb = gb_of(q, {comm});
  const auto basis = central_degree_one(gb);
  CHECK(basis.size() == 2);
  for (const auto& z : basis)
    for (const auto& arrow : q->arrows()) {
      const PathPoly x = PathPoly::of_path(q, kQ, Path::of_arrow_ids(q, {arrow.id}));
      CHECK(gb.normal_form(z * x - x * z).is_zero());
    }
}

TEST_CASE("degree-1 center of C(1,1) is spanned by a+b") {
  const QuiverPtr q = c_quiver();
  const TruncatedGB gb = gb_of(q, c_relations(q, kQ, 1, 1));
  const auto basis = central_degree_one(gb);
  REQUIRE(basis.size() == 1);
  const PathPoly& z = basis[0];
  // Supported on the two loops with equal coefficients.
  REQUIRE(z.term_count() == 2);
  const Scalar ca = z.terms().at(Path::of_arrow_ids(q, {"a"}));
  const Scalar cb = z.terms().at(Path::of_arrow_ids(q, {"b"}));
  CHECK(ca == cb);
  for (const auto& arrow : q->arrows()) {
    const PathPoly x = PathPoly::of_path(q, kQ, Path::of_arrow_ids(q, {arrow.id}));
    CHECK(gb.normal_form(z * x - x * z).is_zero());
  }
}

TEST_CASE("C(1,2) has no degree-1 center") {
  // zd = dz forces alpha*ad = beta*ad via ad = db; zc = cz then fails unless
  // the loop coefficients vanish.
  const QuiverPtr q = c_quiver();
  CHECK(central_degree_one(gb_of(q, c_relations(q, kQ, 1, 2))).empty());
}

TEST_CASE("screen rejects C(1,1) against the free algebra at degree 2") {
  const QuiverPtr q = c_quiver();
  const TruncatedGB a = gb_of(q, c_relations(q, kQ, 1, 1));
  const TruncatedGB b = gb_of(q, {});
  const IsoCertificate cert = iso_necessary(a, b, 4);
  CHECK(cert.verdict == Verdict::NonIsomorphic);
  REQUIRE(cert.failed.has_value());
  CHECK(cert.failed->kind == FailedInvariant::Kind::DimensionMatrix);
  CHECK(cert.failed->degree == 2);
  CHECK(cert.failed->lhs == NatMatrix{{2, 1}, {1, 2}});
  CHECK(cert.failed->rhs == NatMatrix{{2, 2}, {2, 2}});
}

TEST_CASE("screen rejects on vertex count") {
  const TruncatedGB a = gb_of(c_quiver(), c_relations(c_quiver(), kQ, 1, 1));
  const TruncatedGB b = gb_of(two_loops(), {});
  const IsoCertificate cert = iso_necessary(a, b, 3);
  CHECK(cert.verdict == Verdict::NonIsomorphic);
  REQUIRE(cert.failed.has_value());
  CHECK(cert.failed->kind == FailedInvariant::Kind::VertexCount);
}

TEST_CASE("screen rejects on adjacency conjugacy") {
  const QuiverPtr p = make_quiver({"1", "2"}, {{"a", "1", "2"}});
  const QuiverPtr l = make_quiver({"1", "2"}, {{"a", "1", "1"}});
  const IsoCertificate cert = iso_necessary(gb_of(p, {}), gb_of(l, {}), 3);
  CHECK(cert.verdict == Verdict::NonIsomorphic);
  REQUIRE(cert.failed.has_value());
  CHECK(cert.failed->kind == FailedInvariant::Kind::AdjacencyConjugacy);
}

TEST_CASE("screen keeps the relabeling permutation as a candidate") {
  const QuiverPtr q = c_quiver();
  const Permutation sigma({1, 0});
  const QuiverPtr rq = relabel(*q, sigma);
  const TruncatedGB a = gb_of(q, c_relations(q, kQ, 1, 2));
  const TruncatedGB b = gb_of(rq, c_relations(rq, kQ, 1, 2));
  const IsoCertificate cert = iso_necessary(a, b, 4);
  CHECK(cert.verdict == Verdict::Candidates);
  CHECK(std::find(cert.candidates.begin(), cert.candidates.end(), sigma) !=
        cert.candidates.end());
}

TEST_CASE("screen on self always contains the identity, candidates ordered") {
  const QuiverPtr q = c_quiver();
  const TruncatedGB a = gb_of(q, c_relations(q, kQ, 1, 1));
  const IsoCertificate cert = iso_necessary(a, a, 4);
  CHECK(cert.verdict == Verdict::Candidates);
  REQUIRE(!cert.candidates.empty());
  CHECK(std::find(cert.candidates.begin(), cert.candidates.end(), Permutation::identity(2)) !=
        cert.candidates.end());
  CHECK(std::is_sorted(cert.candidates.begin(), cert.candidates.end()));
  // Every survivor conjugates every dimension matrix, degree by degree.
  const DimProfile dims = dimension_matrices(a, 4);
  for (const Permutation& s : cert.candidates)
    for (int n = 0; n <= 4; ++n)
      CHECK(conjugate(dims.by_degree[n], s) == dims.by_degree[n]);
}

TEST_CASE("screen decides the skewed square against C(1,1)") {
  // Degree-2 profiles [[1,2],[2,1]] vs [[2,1],[1,2]] have different diagonal
  // multisets; no permutation conjugates one into the other.
  const QuiverPtr q = c_quiver();
  const std::vector<PathPoly> asg = {term(q, kQ, 1, {"a", "a"}) - term(q, kQ, 1, {"d", "c"}),
                                     term(q, kQ, 1, {"b", "b"}) - term(q, kQ, 1, {"c", "d"})};
  const TruncatedGB a = gb_of(q, asg);
  const TruncatedGB b = gb_of(q, c_relations(q, kQ, 1, 1));
  const IsoCertificate ab = iso_necessary(a, b, 4);
  const IsoCertificate ba = iso_necessary(b, a, 4);
  CHECK(ab.verdict == Verdict::NonIsomorphic);
  CHECK(ba.verdict == Verdict::NonIsomorphic);
  REQUIRE(ab.failed.has_value());
  REQUIRE(ba.failed.has_value());
  CHECK(ab.failed->degree == ba.failed->degree);
  CHECK(ab.failed->lhs == ba.failed->rhs);
  CHECK(ab.failed->rhs == ba.failed->lhs);
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(Verdict::NonIsomorphic) == "non-isomorphic");
  CHECK(verdict_name(Verdict::Candidates) == "candidates");
  CHECK(verdict_name(Verdict::Isomorphic) == "isomorphic");
}
