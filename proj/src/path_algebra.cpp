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

#include "qpa/path_algebra.hpp"

namespace qpa {

Path Path::trivial(QuiverPtr q, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(q->vertex_count()))
    throw InputError("trivial path at unknown vertex index " + std::to_string(vertex));
  return Path(std::move(q), vertex, {});
}

Path Path::of_arrows(QuiverPtr q, std::vector<int> arrow_indices) {
  if (arrow_indices.empty()) throw InputError("arrow path needs at least one arrow");
  for (std::size_t k = 0; k < arrow_indices.size(); ++k) {
    int a = arrow_indices[k];
    if (a < 0 || a >= static_cast<int>(q->arrow_count()))
      throw InputError("arrow index out of range");
    if (k > 0 && q->arrow(a).source != q->arrow(arrow_indices[k - 1]).target)
      throw InputError("non-composable arrows '" + q->arrow(arrow_indices[k - 1]).id +
                       "' and '" + q->arrow(a).id + "'");
  }
  return Path(std::move(q), -1, std::move(arrow_indices));
}

Path Path::of_arrow_ids(QuiverPtr q, const std::vector<std::string>& ids) {
  std::vector<int> idx;
  for (const auto& id : ids) idx.push_back(q->arrow_index(id));
  return of_arrows(std::move(q), std::move(idx));
}

int Path::source() const {
  return is_trivial() ? vertex_ : base_->arrow(arrows_.front()).source;
}

int Path::target() const {
  return is_trivial() ? vertex_ : base_->arrow(arrows_.back()).target;
}

bool Path::passes_through(int vertex) const {
  if (source() == vertex || target() == vertex) return true;
  for (int a : arrows_)
    if (base_->arrow(a).source == vertex || base_->arrow(a).target == vertex) return true;
  return false;
}

bool Path::operator<(const Path& o) const {
  if (length() != o.length()) return length() < o.length();
  if (source() != o.source()) return source() < o.source();
  if (target() != o.target()) return target() < o.target();
  return arrows_ < o.arrows_;
}

bool Path::operator==(const Path& o) const {
  return length() == o.length() && source() == o.source() && arrows_ == o.arrows_;
}

std::string Path::str() const {
  if (is_trivial()) return "e_" + base_->vertex_id(vertex_);
  std::string s;
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    if (k) s += "*";
    s += base_->arrow(arrows_[k]).id;
  }
  return s;
}

PathPoly PathPoly::of_path(QuiverPtr q, Field f, const Path& p) {
  PathPoly r(std::move(q), f);
  r.add_term(p, Scalar::one(f));
  return r;
}

PathPoly PathPoly::unit(QuiverPtr q, Field f) {
  PathPoly r(q, f);
  for (int v = 0; v < static_cast<int>(q->vertex_count()); ++v)
    r.add_term(Path::trivial(q, v), Scalar::one(f));
  return r;
}

int PathPoly::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.length();
}

void PathPoly::add_term(const Path& p, const Scalar& c) {
  if (*p.base() != *base_) throw InputError("term from a different quiver");
  if (c.field() != field_)
    throw InputError("coefficient field " + c.field().name() + " does not match " + field_.name());
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PathPoly::check_compatible(const PathPoly& o) const {
  if (*base_ != *o.base_) throw InputError("operands live over different quivers");
  if (field_ != o.field_)
    throw InputError("operands live over different fields: " + field_.name() + " vs " + o.field_.name());
}

PathPoly PathPoly::operator+(const PathPoly& o) const {
  check_compatible(o);
  PathPoly r = *this;
  for (const auto& [p, c] : o.terms_) r.add_term(p, c);
  return r;
}

PathPoly PathPoly::operator-() const {
  PathPoly r(base_, field_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

PathPoly PathPoly::operator-(const PathPoly& o) const { return *this + (-o); }

PathPoly PathPoly::operator*(const Scalar& c) const {
  PathPoly r(base_, field_);
  if (c.field() != field_) throw InputError("scalar field mismatch");
  if (c.is_zero()) return r;
  for (const auto& [p, coeff] : terms_) r.terms_.emplace(p, coeff * c);
  return r;
}

PathPoly PathPoly::operator*(const PathPoly& o) const { return poly_mul(*this, o); }

bool PathPoly::operator==(const PathPoly& o) const {
  return *base_ == *o.base_ && field_ == o.field_ && terms_ == o.terms_;
}

std::string PathPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string cs = it->second.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != "1") s += mag + "*";
    s += it->first.str();
    first = false;
  }
  return s;
}

PathPoly concat(const Path& p, const Path& q, Field f) {
  if (*p.base() != *q.base()) throw InputError("concat of paths over different quivers");
  PathPoly r(p.base(), f);
  if (p.target() != q.source()) return r;  // zero
  if (p.is_trivial()) {
    r.add_term(q, Scalar::one(f));
  } else if (q.is_trivial()) {
    r.add_term(p, Scalar::one(f));
  } else {
    std::vector<int> arrows = p.arrow_indices();
    arrows.insert(arrows.end(), q.arrow_indices().begin(), q.arrow_indices().end());
    r.add_term(Path::of_arrows(p.base(), std::move(arrows)), Scalar::one(f));
  }
  return r;
}

PathPoly poly_mul(const PathPoly& f, const PathPoly& g) {
  if (*f.base() != *g.base()) throw InputError("product of elements over different quivers");
  if (f.field() != g.field()) throw InputError("product of elements over different fields");
  PathPoly r(f.base(), f.field());
  for (const auto& [p, cp] : f.terms()) {
    for (const auto& [q, cq] : g.terms()) {
      if (p.target() != q.source()) continue;
      PathPoly pq = concat(p, q, f.field());
      for (const auto& [w, one] : pq.terms()) r.add_term(w, cp * cq);
    }
  }
  return r;
}

std::vector<BiComponent> bihomogeneous_components(const PathPoly& f) {
  std::map<std::tuple<int, int, int>, PathPoly> parts;
  for (const auto& [p, c] : f.terms()) {
    auto key = std::make_tuple(p.source(), p.target(), p.length());
    auto it = parts.find(key);
    if (it == parts.end())
      it = parts.emplace(key, PathPoly(f.base(), f.field())).first;
    it->second.add_term(p, c);
  }
  std::vector<BiComponent> r;
  for (auto& [key, poly] : parts)
    r.push_back(BiComponent{std::get<0>(key), std::get<1>(key), std::get<2>(key), std::move(poly)});
  return r;
}

bool is_homogeneous(const PathPoly& f) {
  return bihomogeneous_components(f).size() <= 1;
}

}  // namespace qpa
