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

#include "qpa/dsl.hpp"

#include <cctype>
#include <optional>

namespace qpa {

namespace {

enum class Tok { Ident, Number, LBrace, RBrace, Semi, Colon, Comma, Arrow, Plus, Minus, Star, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        id += take();
      return {Tok::Ident, id, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        num += take();
      return {Tok::Number, num, line, col};
    }
    switch (c) {
      case '{': take(); return {Tok::LBrace, "{", line, col};
      case '}': take(); return {Tok::RBrace, "}", line, col};
      case ';': take(); return {Tok::Semi, ";", line, col};
      case ':': take(); return {Tok::Colon, ":", line, col};
      case ',': take(); return {Tok::Comma, ",", line, col};
      case '+': take(); return {Tok::Plus, "+", line, col};
      case '*': take(); return {Tok::Star, "*", line, col};
      case '/': take(); return {Tok::Slash, "/", line, col};
      case '-':
        take();
        if (pos_ < src_.size() && src_[pos_] == '>') {
          take();
          return {Tok::Arrow, "->", line, col};
        }
        return {Tok::Minus, "-", line, col};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

 private:
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
      if (pos_ < src_.size() && src_[pos_] == '#') {  // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
        continue;
      }
      return;
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lexer_(src), raw_(src) { advance(); }

  QuiverSource parse() {
    QuiverSource out;
    out.raw = raw_;
    expect_keyword("quiver");
    out.name = expect(Tok::Ident, "quiver name").text;
    expect(Tok::LBrace, "'{'");

    expect_keyword("vertices");
    expect(Tok::Colon, "':'");
    std::vector<std::string> vertices;
    vertices.push_back(expect(Tok::Ident, "vertex id").text);
    while (cur_.kind == Tok::Comma) {
      advance();
      vertices.push_back(expect(Tok::Ident, "vertex id").text);
    }
    expect(Tok::Semi, "';'");

    expect_keyword("arrows");
    expect(Tok::Colon, "':'");
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    if (cur_.kind == Tok::Ident) {
      arrows.push_back(parse_arrow());
      while (cur_.kind == Tok::Comma) {
        advance();
        arrows.push_back(parse_arrow());
      }
    }
    expect(Tok::Semi, "';'");

    try {
      out.quiver = make_quiver(vertices, arrows);
    } catch (const InputError& e) {
      throw ParseError(e.what(), cur_.line, cur_.col);
    }

    out.field = Field::rationals();
    if (cur_.kind == Tok::Ident && cur_.text == "field") {
      advance();
      expect(Tok::Colon, "':'");
      out.field = parse_field();
      out.field_declared = true;
      expect(Tok::Semi, "';'");
    }

    if (cur_.kind == Tok::Ident && cur_.text == "relations") {
      advance();
      expect(Tok::Colon, "':'");
      if (cur_.kind != Tok::Semi) {
        out.relation_asts.push_back(parse_expr());
        while (cur_.kind == Tok::Comma) {
          advance();
          out.relation_asts.push_back(parse_expr());
        }
      }
      expect(Tok::Semi, "';'");
    }
    expect(Tok::RBrace, "'}'");
    expect(Tok::End, "end of file");

    out.relations = out.relations_over(out.field);
    return out;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind)
      throw ParseError(std::string("expected ") + what + ", got '" + cur_.text + "'", cur_.line,
                       cur_.col);
    Token t = cur_;
    advance();
    return t;
  }

  void expect_keyword(const char* kw) {
    if (cur_.kind != Tok::Ident || cur_.text != kw)
      throw ParseError(std::string("expected '") + kw + "', got '" + cur_.text + "'", cur_.line,
                       cur_.col);
    advance();
  }

  std::tuple<std::string, std::string, std::string> parse_arrow() {
    std::string id = expect(Tok::Ident, "arrow id").text;
    expect(Tok::Colon, "':'");
    std::string s = expect(Tok::Ident, "source vertex").text;
    expect(Tok::Arrow, "'->'");
    std::string t = expect(Tok::Ident, "target vertex").text;
    return {id, s, t};
  }

  Field parse_field() {
    Token t = expect(Tok::Ident, "field ('Q' or 'F<p>')");
    if (t.text == "Q") return Field::rationals();
    std::string digits;
    if (t.text == "F" || t.text == "f") {
      digits = expect(Tok::Number, "field characteristic").text;
    } else if ((t.text[0] == 'F' || t.text[0] == 'f') && t.text.size() > 1) {
      digits = t.text.substr(1);
    } else {
      throw ParseError("expected 'Q' or 'F<p>', got '" + t.text + "'", t.line, t.col);
    }
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad field characteristic '" + digits + "'", t.line, t.col);
    try {
      return Field::prime(static_cast<std::uint32_t>(std::stoull(digits)));
    } catch (const InputError& e) {
      throw ParseError(e.what(), t.line, t.col);
    }
  }

  Rational parse_rational_magnitude() {
    Token num = expect(Tok::Number, "number");
    Rational r(num.text);
    if (cur_.kind == Tok::Slash) {
      advance();
      Token den = expect(Tok::Number, "denominator");
      Rational d(den.text);
      if (d == 0) throw ParseError("zero denominator", den.line, den.col);
      r /= d;
    }
    return r;
  }

  std::vector<QuiverSource::TermAst> parse_expr() {
    std::vector<QuiverSource::TermAst> terms;
    bool negate = false;
    if (cur_.kind == Tok::Minus) {
      negate = true;
      advance();
    }
    terms.push_back(parse_term(negate));
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      terms.push_back(parse_term(minus));
    }
    return terms;
  }

  QuiverSource::TermAst parse_term(bool negate) {
    QuiverSource::TermAst term;
    term.coeff = 1;
    if (cur_.kind == Tok::Number) {
      term.coeff = parse_rational_magnitude();
      if (cur_.kind == Tok::Star) {
        advance();
      } else if (cur_.kind == Tok::Ident) {
        throw ParseError("expected '*' between coefficient and path", cur_.line, cur_.col);
      } else {
        throw ParseError("a bare scalar is not a relation term; use e_<vertex> for trivial paths",
                         cur_.line, cur_.col);
      }
    }
    if (negate) term.coeff = -term.coeff;
    Token first = expect(Tok::Ident, "arrow or trivial path");
    term.line = first.line;
    term.col = first.col;
    if (first.text.rfind("e_", 0) == 0) {
      term.trivial = true;
      term.vertex = first.text.substr(2);
      if (term.vertex.empty())
        throw ParseError("trivial path needs a vertex: e_<vertex>", first.line, first.col);
      if (cur_.kind == Tok::Star)
        throw ParseError("trivial paths cannot be multiplied inside a term", cur_.line, cur_.col);
      return term;
    }
    term.arrows.push_back(first.text);
    term.arrow_pos.push_back({first.line, first.col});
    while (cur_.kind == Tok::Star) {
      advance();
      Token t = expect(Tok::Ident, "arrow id");
      term.arrows.push_back(t.text);
      term.arrow_pos.push_back({t.line, t.col});
    }
    return term;
  }

  Lexer lexer_;
  std::string raw_;
  Token cur_;
};

}  // namespace

std::vector<PathPoly> QuiverSource::relations_over(Field f) const {
  std::vector<PathPoly> out;
  const QuiverPtr& q = quiver;
  for (const auto& ast : relation_asts) {
    PathPoly rel(q, f);
    int rel_line = ast.empty() ? 0 : ast.front().line;
    int rel_col = ast.empty() ? 0 : ast.front().col;
    for (const auto& term : ast) {
      Scalar c = Scalar::of_rational(f, term.coeff);
      if (term.trivial) {
        int v;
        try {
          v = q->vertex_index(term.vertex);
        } catch (const InputError& e) {
          throw ParseError(e.what(), term.line, term.col);
        }
        rel.add_term(Path::trivial(q, v), c);
        continue;
      }
      std::vector<int> arrows;
      for (std::size_t k = 0; k < term.arrows.size(); ++k) {
        int a;
        try {
          a = q->arrow_index(term.arrows[k]);
        } catch (const InputError& e) {
          throw ParseError(e.what(), term.arrow_pos[k].first, term.arrow_pos[k].second);
        }
        if (k > 0) {
          int prev = arrows.back();
          if (q->arrow(a).source != q->arrow(prev).target)
            throw ParseError("non-composable pair '" + term.arrows[k - 1] + "*" + term.arrows[k] +
                                 "': t(" + term.arrows[k - 1] + ") = " +
                                 q->vertex_id(q->arrow(prev).target) + " but s(" + term.arrows[k] +
                                 ") = " + q->vertex_id(q->arrow(a).source),
                             term.arrow_pos[k].first, term.arrow_pos[k].second);
        }
        arrows.push_back(a);
      }
      rel.add_term(Path::of_arrows(q, arrows), c);
    }
    if (!is_homogeneous(rel)) {
      auto parts = bihomogeneous_components(rel);
      throw ParseError("relation is not homogeneous: component '" + parts[0].part.str() +
                           "' (degree " + std::to_string(parts[0].degree) + ", " +
                           q->vertex_id(parts[0].source) + "->" + q->vertex_id(parts[0].target) +
                           ") differs from '" + parts[1].part.str() + "' (degree " +
                           std::to_string(parts[1].degree) + ", " + q->vertex_id(parts[1].source) +
                           "->" + q->vertex_id(parts[1].target) + ")",
                       rel_line, rel_col);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

QuiverSource parse_quiver(const std::string& text) {
  return Parser(text).parse();
}

std::string print_quiver(const std::string& name, const Quiver& q, Field field,
                         const std::vector<PathPoly>& relations, bool with_field) {
  std::string s = "quiver " + name + " {\n";
  s += "  vertices: ";
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (i) s += ", ";
    s += q.vertex_id(static_cast<int>(i));
  }
  s += ";\n  arrows: ";
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (a) s += ", ";
    const Arrow& arrow = q.arrow(static_cast<int>(a));
    s += arrow.id + ": " + q.vertex_id(arrow.source) + " -> " + q.vertex_id(arrow.target);
  }
  s += ";\n";
  if (with_field) s += "  field: " + field.name() + ";\n";
  if (!relations.empty()) {
    s += "  relations: ";
    for (std::size_t i = 0; i < relations.size(); ++i) {
      if (i) s += ", ";
      s += relations[i].str();
    }
    s += ";\n";
  }
  s += "}\n";
  return s;
}

std::string print_quiver(const QuiverSource& src) {
  return print_quiver(src.name, *src.quiver, src.field, src.relations, src.field_declared);
}

}  // namespace qpa
