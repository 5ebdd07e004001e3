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
#include "oracle.hpp"
#include "qpa/dsl.hpp"
#include "qpa/normal_forms.hpp"
#include "test_support.hpp"

using namespace qpa;
using qpa::testing::c_quiver;
using qpa::testing::c_relations;
using qpa::testing::load_source;
using qpa::testing::random_deg2_generator;
using qpa::testing::random_poly;
using qpa::testing::random_quiver;
using qpa::testing::term;

namespace {

const Field kQ = Field::rationals();

QuiverPtr two_loops() { return make_quiver({"w"}, {{"x", "w", "w"}, {"y", "w", "w"}}); }

PathPoly commutator(QuiverPtr q) {
  return qpa::testing::term(q, kQ, 1, {"y", "x"}) - qpa::testing::term(q, kQ, 1, {"x", "y"});
}

}  // namespace

TEST_CASE("make_ideal validates homogeneity") {
  const QuiverPtr q = c_quiver();
  CHECK_NOTHROW(make_ideal(q, kQ, c_relations(q, kQ, 1, 1)));
  PathPoly mixed(q, kQ);
  mixed.add_term(Path::trivial(q, 0), Scalar::one(kQ));
  mixed.add_term(Path::of_arrow_ids(q, {"a"}), Scalar::one(kQ));
  CHECK_THROWS_AS(make_ideal(q, kQ, {mixed}), InputError);
  // Zero generators are dropped, not stored.
  CHECK(make_ideal(q, kQ, {PathPoly::zero(q, kQ)}).generators.empty());
}

TEST_CASE("prune removes a vertex named by a degree-0 generator") {
  const QuiverPtr q = make_quiver({"1", "2"}, {{"a", "1", "2"}});
  const PathPoly e2 = PathPoly::of_path(q, kQ, Path::trivial(q, 1));
  const PruneResult r = prune_low_degree(q, kQ, {e2});
  CHECK(r.quiver->vertex_ids() == std::vector<std::string>{"1"});
  CHECK(r.quiver->arrow_count() == 0);
  CHECK(r.ideal.generators.empty());
  CHECK(r.removed_vertices == std::vector<std::string>{"2"});
  CHECK(r.removed_arrows == std::vector<std::string>{"a"});
}

TEST_CASE("prune eliminates an arrow named by a degree-1 generator") {
  const QuiverPtr q = make_quiver({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}});
  const PathPoly gen =
      term(q, kQ, 1, {"a"}) - term(q, kQ, 1, {"b"});
  const PruneResult r = prune_low_degree(q, kQ, {gen});
  CHECK(r.quiver->arrow_count() == 1);
  CHECK(r.quiver->arrow(0).id == "a");
  CHECK(r.ideal.generators.empty());
  CHECK(r.removed_arrows == std::vector<std::string>{"b"});
}

TEST_CASE("prune is the identity on degree >= 2 presentations") {
  const QuiverPtr q = c_quiver();
  const PruneResult r = prune_low_degree(q, kQ, c_relations(q, kQ, 1, 1));
  CHECK(*r.quiver == *q);
  CHECK(r.ideal.generators == c_relations(q, kQ, 1, 1));
  CHECK(r.removed_vertices.empty());
  CHECK(r.removed_arrows.empty());
}

TEST_CASE("prune drops generator terms through a removed vertex") {
  const QuiverPtr q = c_quiver();
  std::vector<PathPoly> gens = c_relations(q, kQ, 1, 1);
  gens.push_back(PathPoly::of_path(q, kQ, Path::trivial(q, 1)));  // e_v
  const PruneResult r = prune_low_degree(q, kQ, gens);
  CHECK(r.quiver->vertex_ids() == std::vector<std::string>{"u"});
  CHECK(r.quiver->arrow_count() == 1);  // only the loop a survives
  CHECK(r.ideal.generators.empty());    // both relations pass through v
}

TEST_CASE("prune rejects removing every vertex") {
  const QuiverPtr q = make_quiver({"1"}, {});
  const PathPoly e1 = PathPoly::of_path(q, kQ, Path::trivial(q, 0));
  CHECK_THROWS_AS(prune_low_degree(q, kQ, {e1}), InputError);
}

TEST_CASE("prune substitution preserves the dimension profile") {
  const QuiverPtr q =
      make_quiver({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}, {"l", "u", "u"}});
  const std::vector<PathPoly> gens = {term(q, kQ, 1, {"a"}) - term(q, kQ, 2, {"b"}),
                                      term(q, kQ, 1, {"l", "l"})};
  const PruneResult r = prune_low_degree(q, kQ, gens);
  CHECK(r.quiver->vertex_count() == 2);
  CHECK(r.quiver->arrow_count() == 2);
  const TruncatedGB gb = TruncatedGB::compute(r.ideal, 4);
  const DimProfile dims = dimension_matrices(gb, 4);
  for (int n = 0; n <= 4; ++n)
    CHECK(dims.by_degree[n] == oracle::dimension_matrix(*q, kQ, gens, n));
}

TEST_CASE("empty ideal gives the free algebra") {
  const QuiverPtr q = c_quiver();
  const TruncatedGB gb = TruncatedGB::compute(make_ideal(q, kQ, {}), 5);
  CHECK(gb.elements().empty());
  CHECK(gb.complete_upto() == 5);
  const DimProfile dims = dimension_matrices(gb, 5);
  const NatMatrix m = adjacency_matrix(*q);
  for (unsigned n = 0; n <= 5; ++n) CHECK(dims.by_degree[n] == nat_pow(m, n));
}

TEST_CASE("commutative example: basis, dimensions, rewriting") {
  const QuiverPtr q = two_loops();
  const TruncatedGB gb = TruncatedGB::compute(make_ideal(q, kQ, {commutator(q)}), 5);
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.complete_upto() == 5);

  // yx rewrites to xy.
  CHECK(gb.normal_form(term(q, kQ, 1, {"y", "x"})) == term(q, kQ, 1, {"x", "y"}));
  CHECK(gb.normal_form(commutator(q)).is_zero());

  const auto basis3 = gb.monomial_basis(3, 0, 0);
  std::vector<std::string> names;
  for (const Path& p : basis3) names.push_back(p.str());
  CHECK(names == std::vector<std::string>{"x*x*x", "x*x*y", "x*y*y", "y*y*y"});

  const DimProfile dims = dimension_matrices(gb, 5);
  for (int n = 0; n <= 5; ++n) {
    CHECK(dims.by_degree[n][0][0] == static_cast<std::uint64_t>(n) + 1);
    CHECK(dims.by_degree[n] == oracle::dimension_matrix(*q, kQ, {commutator(q)}, n));
  }
}

TEST_CASE("C(1,1): Groebner basis and dimension matrices") {
  const QuiverPtr q = c_quiver();
  const TruncatedGB gb = TruncatedGB::compute(make_ideal(q, kQ, c_relations(q, kQ, 1, 1)), 4);
  // The two relations have no overlaps among their leading words, so they
  // are already a basis.
  CHECK(gb.elements().size() == 2);
  CHECK(gb.complete_upto() == 4);

  // ad - db lies in the ideal; its normal form vanishes and both monomials
  // share one.
  const PathPoly rel = term(q, kQ, 1, {"a", "d"}) - term(q, kQ, 1, {"d", "b"});
  CHECK(gb.normal_form(rel).is_zero());
  CHECK(gb.normal_form(term(q, kQ, 1, {"d", "b"})) ==
        gb.normal_form(term(q, kQ, 1, {"a", "d"})));

  const DimProfile dims = dimension_matrices(gb, 4);
  CHECK(dims.by_degree[0] == nat_identity(2));
  CHECK(dims.by_degree[1] == adjacency_matrix(*q));
  CHECK(dims.by_degree[2] == NatMatrix{{2, 1}, {1, 2}});
  CHECK(dims.by_degree[3][0][0] == 2);  // a*a*a and a*d*c

  for (int n = 0; n <= 4; ++n)
    CHECK(dims.by_degree[n] == oracle::dimension_matrix(*q, kQ, c_relations(q, kQ, 1, 1), n));
}

TEST_CASE("monomial basis degenerate degrees") {
  const QuiverPtr q = c_quiver();
  const TruncatedGB gb = TruncatedGB::compute(make_ideal(q, kQ, {}), 2);
  const auto e = gb.monomial_basis(0, 0, 0);
  REQUIRE(e.size() == 1);
  CHECK(e[0] == Path::trivial(q, 0));
  CHECK(gb.monomial_basis(0, 0, 1).empty());
}

TEST_CASE("truncation is enforced and reported") {
  const QuiverPtr q = c_quiver();
  const TruncatedGB gb = TruncatedGB::compute(make_ideal(q, kQ, c_relations(q, kQ, 1, 1)), 3);
  CHECK(gb.truncation_degree() == 3);
  const PathPoly deep = term(q, kQ, 1, {"a", "a", "a", "a"});
  CHECK_THROWS_AS(gb.normal_form(deep), TruncationError);
  CHECK_THROWS_AS(gb.monomial_basis(4, 0, 0), TruncationError);
  try {
    gb.normal_form(deep);
  } catch (const TruncationError& e) {
    CHECK(e.truncation_degree == 3);
  }
}

TEST_CASE("compute rejects bad inputs") {
  const QuiverPtr q = c_quiver();
  // Truncation below the generator degree.
  CHECK_THROWS_AS(TruncatedGB::compute(make_ideal(q, kQ, c_relations(q, kQ, 1, 1)), 1),
                  InputError);
  // Unpruned (degree-1) generator.
  const QuiverPtr p = make_quiver({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}});
  const PathPoly lin = term(p, kQ, 1, {"a"}) - term(p, kQ, 1, {"b"});
  CHECK_THROWS_AS(TruncatedGB::compute(make_ideal(p, kQ, {lin}), 3), InputError);
}

TEST_CASE("normal form is a linear projection and decides membership") {
  std::mt19937 rng(29);
  int checked = 0;
  while (checked < 15) {
    const QuiverPtr q = random_quiver(rng, 3, 4);
    const PathPoly gen = random_deg2_generator(rng, q, kQ);
    if (gen.is_zero()) continue;
    ++checked;
    const TruncatedGB gb = TruncatedGB::compute(make_ideal(q, kQ, {gen}), 4);
    for (int iter = 0; iter < 20; ++iter) {
      const PathPoly f = random_poly(rng, q, kQ, 4, 5);
      const PathPoly g = random_poly(rng, q, kQ, 4, 5);
      const PathPoly nf = gb.normal_form(f);
      CHECK(gb.normal_form(nf) == nf);
      CHECK(gb.normal_form(f + g) == gb.normal_form(nf + gb.normal_form(g)));
      CHECK(gb.normal_form(f * Scalar::of_int(kQ, 3)) == nf * Scalar::of_int(kQ, 3));
      CHECK(nf.is_zero() == oracle::in_ideal(f, {gen}));
      CHECK(oracle::in_ideal(f - nf, {gen}));
    }
  }
}

TEST_CASE("dimension matrices are equivariant under relabeling") {
  const Permutation sigma({1, 0});
  const QuiverPtr q = c_quiver();
  const QuiverPtr rq = relabel(*q, sigma);
  const TruncatedGB gb = TruncatedGB::compute(make_ideal(q, kQ, c_relations(q, kQ, 1, 2)), 4);
  const TruncatedGB rgb =
      TruncatedGB::compute(make_ideal(rq, kQ, c_relations(rq, kQ, 1, 2)), 4);
  const DimProfile dims = dimension_matrices(gb, 4);
  const DimProfile rdims = dimension_matrices(rgb, 4);
  for (int n = 0; n <= 4; ++n) CHECK(rdims.by_degree[n] == conjugate(dims.by_degree[n], sigma));
}

TEST_CASE("every corpus ideal matches the enumeration oracle") {
  for (const char* name :
       {"c11.qv", "c22.qv", "c12.qv", "c23.qv", "asg.qv", "commutative.qv", "free2.qv"}) {
    CAPTURE(name);
    const QuiverSource src = load_source(name);
    const TruncatedGB gb =
        TruncatedGB::compute(make_ideal(src.quiver, src.field, src.relations), 4);
    const DimProfile dims = dimension_matrices(gb, 4);
    for (int n = 0; n <= 4; ++n)
      CHECK(dims.by_degree[n] ==
            oracle::dimension_matrix(*src.quiver, src.field, src.relations, n));
  }
}

TEST_CASE("the skewed square presentation has the transposed profile") {
  const QuiverSource src = load_source("asg.qv");
  const TruncatedGB gb = TruncatedGB::compute(make_ideal(src.quiver, src.field, src.relations), 3);
  const DimProfile dims = dimension_matrices(gb, 2);
  CHECK(dims.by_degree[2] == NatMatrix{{1, 2}, {2, 1}});
}
