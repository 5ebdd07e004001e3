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

#include "qpa/iso_search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

namespace qpa {

GradedMap GradedMap::identity(QuiverPtr q, Field f) {
  std::size_t n = q->vertex_count();
  GradedMap m{q, q, f, Permutation::identity(n), {}};
  m.blocks.assign(n, std::vector<ScalarMatrix>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t sz = q->arrows_between(static_cast<int>(u), static_cast<int>(v)).size();
      m.blocks[u][v] = ScalarMatrix::identity(sz, f);
    }
  return m;
}

bool GradedMap::blocks_invertible() const {
  for (const auto& row : blocks)
    for (const auto& b : row)
      if (b.rows() > 0 && !b.is_invertible()) return false;
  return true;
}

std::optional<GradedMap> GradedMap::inverse() const {
  GradedMap inv{target, source, field, sigma.inverse(), {}};
  std::size_t n = source->vertex_count();
  inv.blocks.assign(n, std::vector<ScalarMatrix>(n));
  for (std::size_t u2 = 0; u2 < n; ++u2)
    for (std::size_t v2 = 0; v2 < n; ++v2) {
      int u = inv.sigma(static_cast<int>(u2));
      int v = inv.sigma(static_cast<int>(v2));
      const ScalarMatrix& b = blocks[u][v];
      if (b.rows() == 0) {
        inv.blocks[u2][v2] = ScalarMatrix(0, 0, field);
        continue;
      }
      auto binv = b.inverse();
      if (!binv) return std::nullopt;
      inv.blocks[u2][v2] = std::move(*binv);
    }
  return inv;
}

std::string GradedMap::str() const {
  std::string s = "sigma=" + sigma.str();
  for (int a = 0; a < static_cast<int>(source->arrow_count()); ++a) {
    const Arrow& arrow = source->arrow(a);
    const auto& block_arrows = source->arrows_between(arrow.source, arrow.target);
    std::size_t k = std::find(block_arrows.begin(), block_arrows.end(), a) - block_arrows.begin();
    const auto& images = target->arrows_between(sigma(arrow.source), sigma(arrow.target));
    s += ", " + arrow.id + " -> ";
    bool first = true;
    for (std::size_t l = 0; l < images.size(); ++l) {
      const Scalar& c = blocks[arrow.source][arrow.target].at(k, l);
      if (c.is_zero()) continue;
      if (!first) s += " + ";
      s += c.str() + "*" + target->arrow(images[l]).id;
      first = false;
    }
    if (first) s += "0";
  }
  return s;
}

PathPoly apply_graded_map(const GradedMap& phi, const PathPoly& f) {
  if (*f.base() != *phi.source) throw InputError("element does not live over the map's source");
  if (f.field() != phi.field) throw InputError("element field does not match the map's field");
  std::size_t n = phi.source->vertex_count();
  if (phi.sigma.size() != n) throw InputError("permutation size mismatch");
  // Precompute arrow images.
  std::vector<PathPoly> arrow_image;
  for (int a = 0; a < static_cast<int>(phi.source->arrow_count()); ++a) {
    const Arrow& arrow = phi.source->arrow(a);
    const auto& block_arrows = phi.source->arrows_between(arrow.source, arrow.target);
    std::size_t k = std::find(block_arrows.begin(), block_arrows.end(), a) - block_arrows.begin();
    const ScalarMatrix& block = phi.blocks[arrow.source][arrow.target];
    const auto& images = phi.target->arrows_between(phi.sigma(arrow.source), phi.sigma(arrow.target));
    if (block.rows() != block_arrows.size() || block.cols() != images.size())
      throw InputError("block shape mismatch at (" + phi.source->vertex_id(arrow.source) + "," +
                       phi.source->vertex_id(arrow.target) + ")");
    PathPoly img(phi.target, phi.field);
    for (std::size_t l = 0; l < images.size(); ++l)
      img.add_term(Path::of_arrows(phi.target, {images[l]}), block.at(k, l));
    arrow_image.push_back(std::move(img));
  }

  PathPoly out(phi.target, phi.field);
  for (const auto& [p, c] : f.terms()) {
    if (p.is_trivial()) {
      out.add_term(Path::trivial(phi.target, phi.sigma(p.source())), c);
      continue;
    }
    PathPoly term = PathPoly::of_path(phi.target, phi.field,
                                      Path::trivial(phi.target, phi.sigma(p.source())));
    for (int a : p.arrow_indices()) {
      term = poly_mul(term, arrow_image[a]);
      if (term.is_zero()) break;
    }
    out = out + term * c;
  }
  return out;
}

bool is_graded_isomorphism(const GradedMap& phi, const TruncatedGB& gb_a, const TruncatedGB& gb_b) {
  int max_gen = 0;
  for (const auto& g : gb_a.ideal().generators) max_gen = std::max(max_gen, g.degree());
  for (const auto& g : gb_b.ideal().generators) max_gen = std::max(max_gen, g.degree());
  if (gb_a.complete_upto() < max_gen || gb_b.complete_upto() < max_gen)
    throw TruncationError("isomorphism check needs certification to degree " +
                              std::to_string(max_gen),
                          std::min(gb_a.complete_upto(), gb_b.complete_upto()));
  if (!phi.blocks_invertible()) return false;
  for (const auto& g : gb_a.ideal().generators)
    if (!gb_b.normal_form(apply_graded_map(phi, g)).is_zero()) return false;
  auto psi = phi.inverse();
  if (!psi) return false;
  for (const auto& g : gb_b.ideal().generators)
    if (!gb_a.normal_form(apply_graded_map(*psi, g)).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Search machinery.

namespace {

/// All invertible m x m matrices over F_p, in row-major lexicographic order
/// of their entry vectors.
std::vector<ScalarMatrix> invertible_matrices(std::size_t m, Field f) {
  std::vector<ScalarMatrix> out;
  if (m == 0) {
    out.push_back(ScalarMatrix(0, 0, f));
    return out;
  }
  std::uint64_t p = f.p;
  std::vector<std::uint32_t> entries(m * m, 0);
  for (;;) {
    ScalarMatrix mat(m, m, f);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        mat.at(i, j) = Scalar::of_int(f, entries[i * m + j]);
    if (mat.is_invertible()) out.push_back(std::move(mat));
    // odometer
    std::size_t k = entries.size();
    while (k > 0 && entries[k - 1] == p - 1) entries[--k] = 0;
    if (k == 0) break;
    ++entries[k - 1];
  }
  return out;
}

/// Monomial block candidates: permutation pattern times nonzero scalings.
std::vector<ScalarMatrix> monomial_matrices(std::size_t m, Field f) {
  std::vector<ScalarMatrix> out;
  if (m == 0) {
    out.push_back(ScalarMatrix(0, 0, f));
    return out;
  }
  std::vector<Scalar> pool;
  if (f.is_rational()) {
    for (long long n : {1, -1, 2, -2, 3, -3})
      pool.push_back(Scalar::of_int(f, n));
    for (long long n : {2, -2, 3, -3})
      pool.push_back(Scalar::one(f) / Scalar::of_int(f, n));
  } else {
    for (std::uint32_t n = 1; n < f.p; ++n) pool.push_back(Scalar::of_int(f, n));
  }
  std::vector<int> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i);
  do {
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
      ScalarMatrix mat(m, m, f);
      for (std::size_t i = 0; i < m; ++i) mat.at(i, perm[i]) = pool[pick[i]];
      out.push_back(std::move(mat));
      std::size_t k = m;
      while (k > 0 && pick[k - 1] == pool.size() - 1) pick[--k] = 0;
      if (k == 0) break;
      ++pick[k - 1];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct BlockSlot {
  int u, v;           // source vertex pair
  std::size_t size;   // block dimension
};

/// Enumerates GradedMaps for one sigma from per-size candidate lists, in
/// row-major block order; calls visit until it returns true (found).
std::uint64_t enumerate_maps(const TruncatedGB& gb_a, const TruncatedGB& gb_b,
                             const Permutation& sigma,
                             const std::map<std::size_t, std::vector<ScalarMatrix>>& candidates,
                             const std::function<bool(const GradedMap&)>& visit, bool& found) {
  const QuiverPtr& qa = gb_a.quiver();
  const QuiverPtr& qb = gb_b.quiver();
  std::size_t n = qa->vertex_count();
  std::vector<BlockSlot> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t sz = qa->arrows_between(static_cast<int>(u), static_cast<int>(v)).size();
      std::size_t tz =
          qb->arrows_between(sigma(static_cast<int>(u)), sigma(static_cast<int>(v))).size();
      if (sz != tz) return 0;  // sigma does not conjugate the adjacency
      if (sz > 0) slots.push_back(BlockSlot{static_cast<int>(u), static_cast<int>(v), sz});
    }

  GradedMap phi{qa, qb, gb_a.field(), sigma, {}};
  phi.blocks.assign(n, std::vector<ScalarMatrix>(n, ScalarMatrix(0, 0, gb_a.field())));

  std::uint64_t tried = 0;
  std::vector<std::size_t> pick(slots.size(), 0);
  found = false;
  if (slots.empty()) {
    // No arrows at all: the map is determined by sigma alone.
    ++tried;
    if (visit(phi)) found = true;
    return tried;
  }
  for (;;) {
    for (std::size_t s = 0; s < slots.size(); ++s)
      phi.blocks[slots[s].u][slots[s].v] = candidates.at(slots[s].size)[pick[s]];
    ++tried;
    if (visit(phi)) {
      found = true;
      return tried;
    }
    std::size_t k = slots.size();
    while (k > 0 && pick[k - 1] == candidates.at(slots[k - 1].size).size() - 1) pick[--k] = 0;
    if (k == 0) break;
    ++pick[k - 1];
  }
  return tried;
}

// --- symbolic-diagonal machinery -------------------------------------------

using ExpVec = std::vector<int>;  // exponent of each source arrow's scalar

struct SymConstraint {
  std::map<ExpVec, Scalar> monomials;  // sum over monomials must vanish
};

/// Solves k^e = c constraints multiplicatively by substitution. Unknowns not
/// pinned down are set to 1. Returns the assignment when every constraint
/// checks out.
std::optional<std::vector<Scalar>> solve_binomials(
    std::size_t unknowns, Field f, std::vector<std::pair<ExpVec, Scalar>> equations) {
  std::vector<std::optional<Scalar>> value(unknowns);
  auto substitute = [&](std::pair<ExpVec, Scalar>& eq) {
    for (std::size_t i = 0; i < unknowns; ++i) {
      if (!value[i] || eq.first[i] == 0) continue;
      int e = eq.first[i];
      Scalar v = *value[i];
      Scalar factor = Scalar::one(f);
      for (int j = 0; j < std::abs(e); ++j) factor *= v;
      if (e > 0)
        eq.second = eq.second / factor;
      else
        eq.second = eq.second * factor;
      eq.first[i] = 0;
    }
  };
  std::vector<bool> done(equations.size(), false);
  for (;;) {
    bool progress = false;
    for (std::size_t q = 0; q < equations.size(); ++q) {
      if (done[q]) continue;
      substitute(equations[q]);
      auto& [e, c] = equations[q];
      int live = 0, idx = -1;
      for (std::size_t i = 0; i < unknowns; ++i)
        if (e[i] != 0) {
          ++live;
          idx = static_cast<int>(i);
        }
      if (live == 0) {
        if (!c.is_one()) return std::nullopt;
        done[q] = true;
        progress = true;
      } else if (live == 1 && std::abs(e[idx]) == 1) {
        value[idx] = e[idx] == 1 ? c : c.inverse();
        if (value[idx]->is_zero()) return std::nullopt;
        done[q] = true;
        progress = true;
      }
    }
    if (std::all_of(done.begin(), done.end(), [](bool b) { return b; })) break;
    if (!progress) {
      // Pin the lowest unassigned unknown appearing in a pending equation.
      int pin = -1;
      for (std::size_t q = 0; q < equations.size() && pin < 0; ++q) {
        if (done[q]) continue;
        for (std::size_t i = 0; i < unknowns; ++i)
          if (equations[q].first[i] != 0 && !value[i]) {
            pin = static_cast<int>(i);
            break;
          }
      }
      if (pin < 0) return std::nullopt;  // pending equation with only roots left
      value[pin] = Scalar::one(f);
    }
  }
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < unknowns; ++i) out.push_back(value[i].value_or(Scalar::one(f)));
  return out;
}

/// Diagonal search for one sigma when every adjacency entry is <= 1. Returns
/// a verified map, or nullopt; sets `indeterminate` when a constraint was not
/// binomial (so failure is not a proof of absence beyond this strategy's
/// usual incompleteness).
std::optional<GradedMap> symbolic_diagonal_for_sigma(const TruncatedGB& gb_a,
                                                     const TruncatedGB& gb_b,
                                                     const Permutation& sigma,
                                                     bool& indeterminate) {
  const QuiverPtr& qa = gb_a.quiver();
  const QuiverPtr& qb = gb_b.quiver();
  Field f = gb_a.field();
  std::size_t m = qa->arrow_count();

  // Image arrow per source arrow (unique: block sizes <= 1).
  std::vector<int> image_arrow(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Arrow& arrow = qa->arrow(static_cast<int>(a));
    const auto& imgs = qb->arrows_between(sigma(arrow.source), sigma(arrow.target));
    if (imgs.size() != 1) return std::nullopt;
    image_arrow[a] = imgs[0];
  }

  // Collect vanishing constraints from the images of A's generators.
  std::vector<std::pair<ExpVec, Scalar>> equations;
  for (const auto& g : gb_a.ideal().generators) {
    std::map<std::vector<int>, std::map<ExpVec, Scalar>> by_normal_monomial;
    for (const auto& [p, c] : g.terms()) {
      ExpVec e(m, 0);
      std::vector<int> word;
      for (int a : p.arrow_indices()) {
        ++e[a];
        word.push_back(image_arrow[a]);
      }
      PathPoly nf = gb_b.normal_form(PathPoly::of_path(qb, f, Path::of_arrows(qb, word)));
      for (const auto& [mono, coeff] : nf.terms()) {
        auto& combo = by_normal_monomial[mono.arrow_indices()];
        auto it = combo.find(e);
        if (it == combo.end())
          combo.emplace(e, coeff * c);
        else
          it->second += coeff * c;
      }
    }
    for (auto& [mono, combo] : by_normal_monomial) {
      for (auto it = combo.begin(); it != combo.end();)
        it = it->second.is_zero() ? combo.erase(it) : std::next(it);
      if (combo.empty()) continue;
      if (combo.size() == 1) return std::nullopt;  // c * k^e = 0 has no nonzero solution
      if (combo.size() > 2) {
        indeterminate = true;
        return std::nullopt;
      }
      auto first = combo.begin();
      auto second = std::next(first);
      ExpVec e(m, 0);
      for (std::size_t i = 0; i < m; ++i) e[i] = first->first[i] - second->first[i];
      equations.emplace_back(std::move(e), -(second->second / first->second));
    }
  }

  auto solution = solve_binomials(m, f, std::move(equations));
  if (!solution) return std::nullopt;

  std::size_t n = qa->vertex_count();
  GradedMap phi{qa, qb, f, sigma, {}};
  phi.blocks.assign(n, std::vector<ScalarMatrix>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto& arrows = qa->arrows_between(static_cast<int>(u), static_cast<int>(v));
      ScalarMatrix block(arrows.size(), arrows.size(), f);
      for (std::size_t k = 0; k < arrows.size(); ++k) block.at(k, k) = (*solution)[arrows[k]];
      phi.blocks[u][v] = std::move(block);
    }
  if (!is_graded_isomorphism(phi, gb_a, gb_b)) {
    indeterminate = true;  // heuristic solve missed; do not over-claim
    return std::nullopt;
  }
  return phi;
}

}  // namespace

IsoCertificate search_graded_iso(const TruncatedGB& gb_a, const TruncatedGB& gb_b,
                                 SearchStrategy strategy, SearchOptions options) {
  if (!gb_a.is_pruned() || !gb_b.is_pruned())
    throw InputError("iso search requires pruned ideals (generators of degree >= 2)");
  if (gb_a.field() != gb_b.field())
    throw InputError("both algebras must use the same coefficient field");
  Field f = gb_a.field();
  if (strategy.kind == SearchStrategy::Kind::ExhaustiveFiniteField && f.is_rational())
    throw InputError("exhaustive search requires a prime field; this algebra is over Q");

  int depth = std::min(gb_a.complete_upto(), gb_b.complete_upto());
  IsoCertificate screen = iso_necessary(gb_a, gb_b, depth);

  if (screen.verdict == Verdict::NonIsomorphic) {
    if (strategy.is_complete()) {
      // The screen emptied the search space: report the (trivially) exhausted
      // space, carrying the screen's matrices for replay.
      FailedInvariant w = *screen.failed;
      FailedInvariant exhausted{FailedInvariant::Kind::SearchExhausted, w.degree, w.lhs, w.rhs, 0, 0};
      return IsoCertificate{Verdict::NonIsomorphic, exhausted, {}, nullptr};
    }
    return screen;
  }

  const std::vector<Permutation>& sigmas = screen.candidates;

  // Per-block-size candidate lists for the matrix strategies.
  std::map<std::size_t, std::vector<ScalarMatrix>> candidates;
  if (strategy.kind != SearchStrategy::Kind::SymbolicDiagonal) {
    NatMatrix ma = adjacency_matrix(*gb_a.quiver());
    for (const auto& row : ma)
      for (std::uint64_t sz : row)
        if (sz > 0 && !candidates.count(sz))
          candidates.emplace(sz, strategy.kind == SearchStrategy::Kind::ExhaustiveFiniteField
                                     ? invertible_matrices(sz, f)
                                     : monomial_matrices(sz, f));
  }

  struct SigmaResult {
    std::optional<GradedMap> witness;
    std::uint64_t tried = 0;
    bool indeterminate = false;
  };
  std::vector<SigmaResult> results(sigmas.size());

  std::atomic<std::size_t> next{0};
  std::atomic<long> best_found{static_cast<long>(sigmas.size())};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= sigmas.size()) return;
      // Nothing lexicographically smaller can come from a larger index.
      if (static_cast<long>(i) > best_found.load()) continue;
      SigmaResult& r = results[i];
      if (strategy.kind == SearchStrategy::Kind::SymbolicDiagonal) {
        r.witness = symbolic_diagonal_for_sigma(gb_a, gb_b, sigmas[i], r.indeterminate);
      } else {
        bool found = false;
        r.tried = enumerate_maps(
            gb_a, gb_b, sigmas[i], candidates,
            [&](const GradedMap& phi) {
              // A smaller sigma already has a witness: abandon this one.
              if (!options.deterministic && best_found.load() < static_cast<long>(i)) return true;
              if (!is_graded_isomorphism(phi, gb_a, gb_b)) return false;
              r.witness = phi;
              return true;
            },
            found);
      }
      if (r.witness) {
        long expect = best_found.load();
        while (static_cast<long>(i) < expect &&
               !best_found.compare_exchange_weak(expect, static_cast<long>(i))) {
        }
      }
    }
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::uint64_t total_tried = 0;
  bool any_indeterminate = false;
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    total_tried += results[i].tried;
    any_indeterminate = any_indeterminate || results[i].indeterminate;
    if (results[i].witness)
      return IsoCertificate{Verdict::Isomorphic, std::nullopt, {sigmas[i]},
                            std::make_shared<GradedMap>(*results[i].witness)};
  }

  (void)any_indeterminate;
  if (strategy.is_complete()) {
    FailedInvariant exhausted{FailedInvariant::Kind::SearchExhausted, -1, {}, {},
                              total_tried, sigmas.size()};
    return IsoCertificate{Verdict::NonIsomorphic, exhausted, {}, nullptr};
  }
  // Incomplete strategies never license a negative.
  return IsoCertificate{Verdict::Candidates, std::nullopt, sigmas, nullptr};
}

PolynomialExtension polynomial_extension(const TruncatedGB& gb) {
  if (!gb.is_pruned()) throw InputError("polynomial extension requires a pruned presentation");
  const QuiverPtr& q = gb.quiver();
  Field f = gb.field();
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const Arrow& a : q->arrows())
    arrows.emplace_back(a.id, q->vertex_id(a.source), q->vertex_id(a.target));
  std::vector<std::string> t_names;
  for (const auto& vid : q->vertex_ids()) {
    std::string name = "t_" + vid;
    while (std::any_of(arrows.begin(), arrows.end(),
                       [&](const auto& tup) { return std::get<0>(tup) == name; }))
      name += "_";
    t_names.push_back(name);
    arrows.emplace_back(name, vid, vid);
  }
  QuiverPtr ext = make_quiver(std::vector<std::string>(q->vertex_ids()), std::move(arrows));

  std::vector<PathPoly> gens;
  for (const auto& g : gb.ideal().generators) {
    PathPoly mapped(ext, f);
    for (const auto& [p, c] : g.terms()) {
      std::vector<int> word;
      for (int a : p.arrow_indices()) word.push_back(ext->arrow_index(q->arrow(a).id));
      mapped.add_term(Path::of_arrows(ext, word), c);
    }
    gens.push_back(std::move(mapped));
  }
  // t_u * a - a * t_v: the new loops are central among the old arrows.
  for (const Arrow& a : q->arrows()) {
    int ai = ext->arrow_index(a.id);
    int tu = ext->arrow_index(t_names[a.source]);
    int tv = ext->arrow_index(t_names[a.target]);
    PathPoly rel(ext, f);
    rel.add_term(Path::of_arrows(ext, {tu, ai}), Scalar::one(f));
    rel.add_term(Path::of_arrows(ext, {ai, tv}), -Scalar::one(f));
    gens.push_back(std::move(rel));
  }
  HomogeneousIdeal ideal = make_ideal(ext, f, std::move(gens));
  return PolynomialExtension{ext, std::move(ideal)};
}

}  // namespace qpa
