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

#include "qpa/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace qpa {

NatMatrix nat_identity(std::size_t n) {
  NatMatrix m(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

NatMatrix nat_mul(const NatMatrix& a, const NatMatrix& b) {
  std::size_t n = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  NatMatrix r(n, std::vector<std::uint64_t>(c, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < c; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

NatMatrix nat_pow(const NatMatrix& m, unsigned e) {
  NatMatrix r = nat_identity(m.size());
  for (unsigned i = 0; i < e; ++i) r = nat_mul(r, m);
  return r;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw InputError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(im));
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

Quiver::Quiver(std::vector<std::string> vertex_ids,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertex_ids_(std::move(vertex_ids)) {
  if (vertex_ids_.empty()) throw InputError("a quiver needs at least one vertex");
  std::set<std::string> seen(vertex_ids_.begin(), vertex_ids_.end());
  if (seen.size() != vertex_ids_.size()) throw InputError("duplicate vertex id");
  std::set<std::string> arrow_ids;
  for (auto& [id, s, t] : arrows) {
    if (!arrow_ids.insert(id).second) throw InputError("duplicate arrow id '" + id + "'");
    arrows_.push_back(Arrow{id, vertex_index(s), vertex_index(t)});
  }
  std::size_t n = vertex_ids_.size();
  between_.assign(n, std::vector<std::vector<int>>(n));
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    between_[arrows_[a].source][arrows_[a].target].push_back(static_cast<int>(a));
}

int Quiver::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i)
    if (vertex_ids_[i] == id) return static_cast<int>(i);
  throw InputError("unknown vertex '" + id + "'");
}

int Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return static_cast<int>(i);
  throw InputError("unknown arrow '" + id + "'");
}

const std::vector<int>& Quiver::arrows_between(int u, int v) const {
  return between_[u][v];
}

std::vector<int> Quiver::loops() const {
  std::vector<int> r;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == arrows_[a].target) r.push_back(static_cast<int>(a));
  return r;
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertex_ids_ != o.vertex_ids_ || arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].id != o.arrows_[a].id || arrows_[a].source != o.arrows_[a].source ||
        arrows_[a].target != o.arrows_[a].target)
      return false;
  return true;
}

QuiverPtr make_quiver(std::vector<std::string> vertex_ids,
                      std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
  return std::make_shared<Quiver>(std::move(vertex_ids), std::move(arrows));
}

NatMatrix adjacency_matrix(const Quiver& q) {
  std::size_t n = q.vertex_count();
  NatMatrix m(n, std::vector<std::uint64_t>(n, 0));
  for (const Arrow& a : q.arrows()) ++m[a.source][a.target];
  return m;
}

std::uint64_t path_count(const Quiver& q, int u, int v, unsigned len) {
  int n = static_cast<int>(q.vertex_count());
  if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("vertex index out of range");
  return nat_pow(adjacency_matrix(q), len)[u][v];
}

std::uint64_t path_count(const Quiver& q, const std::string& u, const std::string& v, unsigned len) {
  return path_count(q, q.vertex_index(u), q.vertex_index(v), len);
}

QuiverPtr relabel(const Quiver& q, const Permutation& sigma) {
  if (sigma.size() != q.vertex_count())
    throw InputError("permutation size does not match vertex count");
  std::size_t n = q.vertex_count();
  // Vertex at old index i moves to new index sigma(i); the id travels with it.
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[sigma(static_cast<int>(i))] = q.vertex_id(static_cast<int>(i));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const Arrow& a : q.arrows())
    arrows.emplace_back(a.id, q.vertex_id(a.source), q.vertex_id(a.target));
  return make_quiver(std::move(ids), std::move(arrows));
}

NatMatrix conjugate(const NatMatrix& m, const Permutation& sigma) {
  std::size_t n = m.size();
  NatMatrix r(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      r[sigma(static_cast<int>(u))][sigma(static_cast<int>(v))] = m[u][v];
  return r;
}

namespace {

struct VertexSignature {
  std::vector<std::uint64_t> sorted_row, sorted_col;
  std::uint64_t row_sum = 0, col_sum = 0, diag = 0;
  bool operator==(const VertexSignature&) const = default;
};

VertexSignature signature(const NatMatrix& m, std::size_t v) {
  VertexSignature s;
  s.sorted_row = m[v];
  std::sort(s.sorted_row.begin(), s.sorted_row.end());
  for (std::size_t j = 0; j < m.size(); ++j) {
    s.sorted_col.push_back(m[j][v]);
    s.row_sum += m[v][j];
    s.col_sum += m[j][v];
  }
  std::sort(s.sorted_col.begin(), s.sorted_col.end());
  s.diag = m[v][v];
  return s;
}

}  // namespace

std::vector<Permutation> conjugacy_permutations(const NatMatrix& m, const NatMatrix& n) {
  std::vector<Permutation> result;
  std::size_t sz = m.size();
  if (n.size() != sz) return result;

  // Degree pruning: vertex u may only map to vertices with the same
  // in/out-degree data and loop count.
  std::vector<VertexSignature> sig_m(sz), sig_n(sz);
  for (std::size_t v = 0; v < sz; ++v) {
    sig_m[v] = signature(m, v);
    sig_n[v] = signature(n, v);
  }
  std::vector<std::vector<int>> candidates(sz);
  for (std::size_t u = 0; u < sz; ++u) {
    for (std::size_t w = 0; w < sz; ++w)
      if (sig_m[u].row_sum == sig_n[w].row_sum && sig_m[u].col_sum == sig_n[w].col_sum &&
          sig_m[u].diag == sig_n[w].diag)
        candidates[u].push_back(static_cast<int>(w));
    if (candidates[u].empty()) return result;
  }

  std::vector<int> images(sz, -1);
  std::vector<bool> used(sz, false);
  // Backtrack in lexicographic order of the image sequence.
  auto consistent = [&](std::size_t depth) {
    for (std::size_t j = 0; j <= depth; ++j) {
      if (m[depth][j] != n[images[depth]][images[j]]) return false;
      if (m[j][depth] != n[images[j]][images[depth]]) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (depth == sz) {
      result.push_back(Permutation(images));
      return;
    }
    for (int w : candidates[depth]) {
      if (used[w]) continue;
      images[depth] = w;
      if (consistent(depth)) {
        used[w] = true;
        search(depth + 1);
        used[w] = false;
      }
    }
    images[depth] = -1;
  };
  search(0);
  return result;
}

}  // namespace qpa
