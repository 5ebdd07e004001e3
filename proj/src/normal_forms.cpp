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

#include "qpa/normal_forms.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <tuple>

namespace qpa {

namespace {

using Word = std::vector<int>;

std::pair<Path, Scalar> leading_term(const PathPoly& f) {
  auto it = f.terms().rbegin();
  return {it->first, it->second};
}

/// Position of the leftmost occurrence of `sub` in `w`, or -1.
int find_subword(const Word& w, const Word& sub) {
  if (sub.size() > w.size()) return -1;
  for (std::size_t i = 0; i + sub.size() <= w.size(); ++i)
    if (std::equal(sub.begin(), sub.end(), w.begin() + i)) return static_cast<int>(i);
  return -1;
}

bool is_suffix(const Word& w, const Word& sub) {
  return sub.size() <= w.size() && std::equal(sub.begin(), sub.end(), w.end() - sub.size());
}

/// x * f * y with x, y arrow words (possibly empty).
PathPoly sandwich(const PathPoly& f, const Word& x, const Word& y) {
  PathPoly r(f.base(), f.field());
  for (const auto& [p, c] : f.terms()) {
    Word w = x;
    const Word& mid = p.arrow_indices();
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), y.begin(), y.end());
    r.add_term(Path::of_arrows(f.base(), std::move(w)), c);
  }
  return r;
}

PathPoly make_monic(const PathPoly& f) {
  return f * leading_term(f).second.inverse();
}

}  // namespace

HomogeneousIdeal make_ideal(QuiverPtr quiver, Field field, std::vector<PathPoly> generators) {
  std::vector<PathPoly> gens;
  for (auto& g : generators) {
    if (*g.base() != *quiver || g.field() != field)
      throw InputError("generator does not live over the ideal's quiver/field");
    if (!is_homogeneous(g))
      throw InputError("generator is not homogeneous: " + g.str());
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return HomogeneousIdeal{std::move(quiver), field, std::move(gens)};
}

namespace {

/// Rebuilds f over `target`, dropping terms that pass through the removed
/// vertex. Valid because every such path lies in the ideal once e_v does.
std::optional<PathPoly> drop_vertex(const PathPoly& f, QuiverPtr target, int removed_vertex,
                                    const Quiver& old_q) {
  PathPoly r(target, f.field());
  for (const auto& [p, c] : f.terms()) {
    if (p.passes_through(removed_vertex)) continue;
    if (p.is_trivial()) {
      r.add_term(Path::trivial(target, target->vertex_index(old_q.vertex_id(p.source()))), c);
    } else {
      std::vector<int> arrows;
      for (int a : p.arrow_indices()) arrows.push_back(target->arrow_index(old_q.arrow(a).id));
      r.add_term(Path::of_arrows(target, std::move(arrows)), c);
    }
  }
  if (r.is_zero()) return std::nullopt;
  return r;
}

/// Rebuilds f over `target` substituting the removed arrow by `image`
/// (a degree-1 combination of the surviving parallel arrows).
std::optional<PathPoly> substitute_arrow(const PathPoly& f, QuiverPtr target, int removed_arrow,
                                         const PathPoly& image, const Quiver& old_q) {
  PathPoly r(target, f.field());
  for (const auto& [p, c] : f.terms()) {
    if (p.is_trivial()) {
      r.add_term(Path::trivial(target, target->vertex_index(old_q.vertex_id(p.source()))), c);
      continue;
    }
    PathPoly term = PathPoly::of_path(target, f.field(),
                                      Path::trivial(target, target->vertex_index(
                                                                old_q.vertex_id(p.source()))));
    for (int a : p.arrow_indices()) {
      if (a == removed_arrow) {
        term = poly_mul(term, image);
      } else {
        PathPoly arrow_poly = PathPoly::of_path(
            target, f.field(), Path::of_arrows(target, {target->arrow_index(old_q.arrow(a).id)}));
        term = poly_mul(term, arrow_poly);
      }
      if (term.is_zero()) break;
    }
    r = r + term * c;
  }
  if (r.is_zero()) return std::nullopt;
  return r;
}

}  // namespace

PruneResult prune_low_degree(QuiverPtr quiver, Field field, std::vector<PathPoly> generators) {
  // Validate up front so a bad generator is reported on the original quiver.
  for (const auto& g : generators)
    if (!is_homogeneous(g)) throw InputError("generator is not homogeneous: " + g.str());

  PruneResult result;
  QuiverPtr q = std::move(quiver);
  std::vector<PathPoly> gens;
  for (auto& g : generators)
    if (!g.is_zero()) gens.push_back(std::move(g));

  for (;;) {
    // Degree-0 generator alpha * e_v: remove vertex v.
    auto deg0 = std::find_if(gens.begin(), gens.end(),
                             [](const PathPoly& g) { return g.degree() == 0; });
    if (deg0 != gens.end()) {
      int v = deg0->terms().begin()->first.source();
      result.removed_vertices.push_back(q->vertex_id(v));
      std::vector<std::string> vertex_ids;
      for (int i = 0; i < static_cast<int>(q->vertex_count()); ++i)
        if (i != v) vertex_ids.push_back(q->vertex_id(i));
      if (vertex_ids.empty())
        throw InputError("pruning removed every vertex; the quotient is the zero ring");
      std::vector<std::tuple<std::string, std::string, std::string>> arrows;
      for (const Arrow& a : q->arrows()) {
        if (a.source == v || a.target == v) {
          result.removed_arrows.push_back(a.id);
          continue;
        }
        arrows.emplace_back(a.id, q->vertex_id(a.source), q->vertex_id(a.target));
      }
      QuiverPtr next = make_quiver(std::move(vertex_ids), std::move(arrows));
      std::vector<PathPoly> next_gens;
      for (const auto& g : gens) {
        if (&g == &*deg0) continue;
        if (auto mapped = drop_vertex(g, next, v, *q)) next_gens.push_back(std::move(*mapped));
      }
      q = std::move(next);
      gens = std::move(next_gens);
      continue;
    }

    // Degree-1 generator sum alpha_k a_k over parallel arrows: eliminate the
    // leading arrow by substitution.
    auto deg1 = std::find_if(gens.begin(), gens.end(),
                             [](const PathPoly& g) { return g.degree() == 1; });
    if (deg1 != gens.end()) {
      auto [lead, coeff] = leading_term(*deg1);
      int removed = lead.arrow_indices()[0];
      result.removed_arrows.push_back(q->arrow(removed).id);
      std::vector<std::tuple<std::string, std::string, std::string>> arrows;
      for (const Arrow& a : q->arrows())
        if (q->arrow_index(a.id) != removed)
          arrows.emplace_back(a.id, q->vertex_id(a.source), q->vertex_id(a.target));
      QuiverPtr next = make_quiver(std::vector<std::string>(q->vertex_ids()), std::move(arrows));
      // removed = -(1/coeff) * (rest of the generator)
      PathPoly image(next, field);
      for (const auto& [p, c] : deg1->terms()) {
        if (p == lead) continue;
        image.add_term(Path::of_arrows(next, {next->arrow_index(q->arrow(p.arrow_indices()[0]).id)}),
                       -(c / coeff));
      }
      std::vector<PathPoly> next_gens;
      for (const auto& g : gens) {
        if (&g == &*deg1) continue;
        if (auto mapped = substitute_arrow(g, next, removed, image, *q))
          next_gens.push_back(std::move(*mapped));
      }
      q = std::move(next);
      gens = std::move(next_gens);
      continue;
    }

    break;
  }

  result.ideal = make_ideal(q, field, std::move(gens));
  result.quiver = std::move(q);
  return result;
}

// ---------------------------------------------------------------------------
// Truncated Buchberger completion on path monomials.

namespace {

struct Pair {
  int degree;
  int gi, gj;     // indices into the working basis
  int overlap;    // suffix of lw(gi) = prefix of lw(gj), this long
  bool operator>(const Pair& o) const {
    return std::tie(degree, gi, gj, overlap) > std::tie(o.degree, o.gi, o.gj, o.overlap);
  }
};

class Completion {
 public:
  Completion(const HomogeneousIdeal& ideal, int max_degree)
      : ideal_(ideal), max_degree_(max_degree) {}

  std::vector<PathPoly> run() {
    for (const auto& g : ideal_.generators) insert(g);
    while (!pairs_.empty()) {
      Pair pr = pairs_.top();
      pairs_.pop();
      if (!alive_[pr.gi] || !alive_[pr.gj]) continue;
      insert(s_poly(pr));
    }
    return inter_reduced();
  }

 private:
  const Word& lw(int i) const { return lead_[i]; }

  PathPoly s_poly(const Pair& pr) {
    const PathPoly& g = basis_[pr.gi];
    const PathPoly& h = basis_[pr.gj];
    const Word& wg = lw(pr.gi);
    const Word& wh = lw(pr.gj);
    Word x(wg.begin(), wg.end() - pr.overlap);          // wg = x . o
    Word y(wh.begin() + pr.overlap, wh.end());          // wh = o . y
    return sandwich(g, {}, y) - sandwich(h, x, {});     // leads cancel
  }

  PathPoly reduce(PathPoly f) const {
    for (;;) {
      bool rewrote = false;
      for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Word& w = it->first.arrow_indices();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
          if (!alive_[i]) continue;
          int pos = find_subword(w, lead_[i]);
          if (pos < 0) continue;
          Word x(w.begin(), w.begin() + pos);
          Word y(w.begin() + pos + lead_[i].size(), w.end());
          f = f - sandwich(basis_[i], x, y) * it->second;
          rewrote = true;
          break;
        }
        if (rewrote) break;
      }
      if (!rewrote) return f;
    }
  }

  void insert(const PathPoly& candidate) {
    PathPoly h = reduce(candidate);
    if (h.is_zero()) return;
    h = make_monic(h);
    Word wh = leading_term(h).first.arrow_indices();

    // Retire basis elements whose lead the new lead divides; their reduced
    // remnants are re-inserted and regenerate their overlaps.
    std::vector<PathPoly> requeue;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!alive_[i]) continue;
      if (find_subword(lead_[i], wh) >= 0) {
        alive_[i] = false;
        requeue.push_back(basis_[i]);
      }
    }

    int idx = static_cast<int>(basis_.size());
    basis_.push_back(h);
    lead_.push_back(wh);
    alive_.push_back(true);
    for (int i = 0; i <= idx; ++i) {
      if (!alive_[i]) continue;
      queue_overlaps(i, idx);
      if (i != idx) queue_overlaps(idx, i);
    }
    for (const auto& r : requeue) insert(r);
  }

  void queue_overlaps(int i, int j) {
    const Word& a = lw(i);
    const Word& b = lw(j);
    int max_o = static_cast<int>(std::min(a.size(), b.size())) - 1;
    for (int o = 1; o <= max_o; ++o) {
      if (!std::equal(b.begin(), b.begin() + o, a.end() - o)) continue;
      int deg = static_cast<int>(a.size() + b.size()) - o;
      if (deg > max_degree_) continue;
      pairs_.push(Pair{deg, i, j, o});
    }
  }

  std::vector<PathPoly> inter_reduced() {
    // Lead words are final; reduce each tail against the others.
    std::vector<PathPoly> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!alive_[i]) continue;
      alive_[i] = false;
      PathPoly r = reduce(basis_[i]);
      alive_[i] = true;
      basis_[i] = make_monic(r);
    }
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (alive_[i]) out.push_back(basis_[i]);
    std::sort(out.begin(), out.end(), [](const PathPoly& a, const PathPoly& b) {
      return leading_term(a).first < leading_term(b).first;
    });
    return out;
  }

  const HomogeneousIdeal& ideal_;
  int max_degree_;
  std::vector<PathPoly> basis_;
  std::vector<Word> lead_;
  std::vector<bool> alive_;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs_;
};

}  // namespace

TruncatedGB TruncatedGB::compute(HomogeneousIdeal ideal, int truncation_degree) {
  int max_gen_degree = 0;
  for (const auto& g : ideal.generators) {
    if (g.degree() < 2)
      throw InputError("generator of degree " + std::to_string(g.degree()) +
                       " (" + g.str() + "); run prune_low_degree first");
    max_gen_degree = std::max(max_gen_degree, g.degree());
  }
  if (truncation_degree < max_gen_degree)
    throw InputError("truncation degree " + std::to_string(truncation_degree) +
                     " is below the maximal generator degree " + std::to_string(max_gen_degree));
  Completion completion(ideal, truncation_degree);
  TruncatedGB gb;
  gb.elements_ = completion.run();
  gb.ideal_ = std::move(ideal);
  gb.truncation_degree_ = truncation_degree;
  // Every overlap of degree <= D was processed, so rewriting is confluent
  // through the full truncation window.
  gb.complete_upto_ = truncation_degree;
  for (const auto& e : gb.elements_)
    gb.lead_words_.push_back(leading_term(e).first.arrow_indices());
  return gb;
}

bool TruncatedGB::is_pruned() const {
  for (const auto& g : ideal_.generators)
    if (g.degree() < 2) return false;
  return true;
}

void TruncatedGB::check_degree(int n, const char* what) const {
  if (n > complete_upto_)
    throw TruncationError(std::string(what) + " at degree " + std::to_string(n) +
                              " exceeds the certified truncation degree " +
                              std::to_string(complete_upto_),
                          complete_upto_);
}

PathPoly TruncatedGB::normal_form(const PathPoly& f) const {
  if (*f.base() != *quiver() || f.field() != field())
    throw InputError("normal_form input lives over a different quiver or field");
  check_degree(f.degree(), "normal form");
  PathPoly r = f;
  for (;;) {
    bool rewrote = false;
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
      const auto& w = it->first.arrow_indices();
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        int pos = find_subword(w, lead_words_[i]);
        if (pos < 0) continue;
        std::vector<int> x(w.begin(), w.begin() + pos);
        std::vector<int> y(w.begin() + pos + lead_words_[i].size(), w.end());
        r = r - sandwich(elements_[i], x, y) * it->second;
        rewrote = true;
        break;
      }
      if (rewrote) break;
    }
    if (!rewrote) return r;
  }
}

std::vector<Path> TruncatedGB::monomial_basis(int n, int u, int v) const {
  if (n < 0) throw InputError("negative degree");
  int nv = static_cast<int>(quiver()->vertex_count());
  if (u < 0 || u >= nv || v < 0 || v >= nv) throw InputError("vertex index out of range");
  check_degree(n, "monomial basis");
  std::vector<Path> out;
  if (n == 0) {
    if (u == v) out.push_back(Path::trivial(quiver(), u));
    return out;
  }
  std::vector<int> word;
  // A word whose proper prefix is irreducible is reducible iff a lead word is
  // one of its suffixes.
  auto reducible_tail = [&]() {
    for (const auto& lead : lead_words_)
      if (is_suffix(word, lead)) return true;
    return false;
  };
  std::function<void(int)> grow = [&](int at) {
    if (static_cast<int>(word.size()) == n) {
      if (at == v) out.push_back(Path::of_arrows(quiver(), word));
      return;
    }
    for (std::size_t a = 0; a < quiver()->arrow_count(); ++a) {
      const Arrow& arrow = quiver()->arrow(static_cast<int>(a));
      if (arrow.source != at) continue;
      word.push_back(static_cast<int>(a));
      if (!reducible_tail()) grow(arrow.target);
      word.pop_back();
    }
  };
  grow(u);
  return out;
}

DimProfile dimension_matrices(const TruncatedGB& gb, int max_degree) {
  if (max_degree > gb.complete_upto())
    throw TruncationError("dimension matrices requested beyond the certified degree " +
                              std::to_string(gb.complete_upto()),
                          gb.complete_upto());
  std::size_t n = gb.quiver()->vertex_count();
  DimProfile profile;
  for (int d = 0; d <= max_degree; ++d) {
    NatMatrix m(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        m[u][v] = gb.monomial_basis(d, static_cast<int>(u), static_cast<int>(v)).size();
    profile.by_degree.push_back(std::move(m));
  }
  return profile;
}

}  // namespace qpa
