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

// Command-line surface: dims, prune, invariants, iso, extend.
//
// Exit codes: 0 verdict computed (any verdict), 1 usage error, 2 parse
// error, 3 truncation insufficient.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpa/dsl.hpp"
#include "qpa/report.hpp"

namespace {

using nlohmann::json;
using namespace qpa;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitTruncation = 3;

QuiverSource load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_quiver(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what(), e.line, e.col);
  }
}

Field parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if ((s[0] == 'f' || s[0] == 'F') && s.size() > 1)
    return Field::prime(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
  throw InputError("bad --field value '" + s + "' (expected q or f<p>)");
}

/// Declared field vs --field: an explicit conflict is an error, not a
/// silent override.
Field resolve_field(const QuiverSource& src, const std::string& flag) {
  if (flag.empty()) return src.field;
  Field f = parse_field_flag(flag);
  if (src.field_declared && !(f == src.field))
    throw InputError("--field " + f.name() + " conflicts with the file's declared field " +
                     src.field.name());
  return f;
}

struct Prepared {
  QuiverSource src;
  PruneResult pruned;
  TruncatedGB gb;
};

Prepared prepare(const std::string& path, const std::string& field_flag, int max_degree) {
  QuiverSource src = load(path);
  Field f = resolve_field(src, field_flag);
  PruneResult pruned = prune_low_degree(src.quiver, f, src.relations_over(f));
  int gen_degree = 0;
  for (const auto& g : pruned.ideal.generators) gen_degree = std::max(gen_degree, g.degree());
  TruncatedGB gb = TruncatedGB::compute(pruned.ideal, std::max(max_degree, gen_degree));
  return Prepared{std::move(src), std::move(pruned), std::move(gb)};
}

void print_nat_matrix(const NatMatrix& m, std::ostream& os) {
  for (const auto& row : m) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "]\n";
  }
}

int run_dims(const std::string& file, const std::string& field_flag, int max_degree, bool as_json) {
  Prepared p = prepare(file, field_flag, max_degree);
  DimProfile profile = dimension_matrices(p.gb, max_degree);
  if (as_json) {
    json j = report_envelope("dims", p.gb.field(), p.gb.truncation_degree(), p.gb.complete_upto());
    j["input"] = print_quiver(p.src);
    j["vertices"] = p.pruned.quiver->vertex_ids();
    j["dimension_matrices"] = json_of(profile);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "field: " << p.gb.field().name() << ", certified up to degree "
            << p.gb.complete_upto() << "\n";
  for (std::size_t d = 0; d < profile.by_degree.size(); ++d) {
    std::cout << "degree " << d << ":\n";
    print_nat_matrix(profile.by_degree[d], std::cout);
  }
  return kExitOk;
}

int run_prune(const std::string& file, const std::string& field_flag) {
  QuiverSource src = load(file);
  Field f = resolve_field(src, field_flag);
  PruneResult pruned = prune_low_degree(src.quiver, f, src.relations_over(f));
  std::cout << print_quiver(src.name, *pruned.quiver, f, pruned.ideal.generators,
                            src.field_declared || !field_flag.empty());
  return kExitOk;
}

int run_invariants(const std::string& file, const std::string& file2,
                   const std::string& field_flag, int max_degree, bool as_json) {
  Prepared a = prepare(file, field_flag, max_degree);
  TangentDim tangent = tangent_dimension(a.gb);
  std::vector<PathPoly> center = central_degree_one(a.gb);

  json j = report_envelope("invariants", a.gb.field(), a.gb.truncation_degree(),
                           a.gb.complete_upto());
  j["input"] = print_quiver(a.src);
  j["tangent_dimension"] = json_of(tangent.matrix);
  json center_json = json::array();
  for (const auto& z : center) center_json.push_back(z.str());
  j["central_degree_one"] = center_json;

  if (!as_json) {
    std::cout << "tangent dimension:\n";
    print_nat_matrix(tangent.matrix, std::cout);
    std::cout << "degree-1 center basis (" << center.size() << "):\n";
    for (const auto& z : center) std::cout << "  " << z.str() << "\n";
  }

  if (!file2.empty()) {
    Prepared b = prepare(file2, field_flag, max_degree);
    if (!(a.gb.field() == b.gb.field()))
      throw InputError("the two inputs use different fields; pass --field to unify");
    IsoCertificate screen = iso_necessary(a.gb, b.gb, max_degree);
    j["screen"] = json_of(screen);
    if (!as_json) {
      std::cout << "necessary-condition screen: " << verdict_name(screen.verdict) << "\n";
      if (screen.failed) std::cout << "  witness: " << screen.failed->describe() << "\n";
      for (const auto& s : screen.candidates) std::cout << "  candidate sigma " << s.str() << "\n";
    }
  }
  if (as_json) std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_iso(const std::string& file1, const std::string& file2, const std::string& field_flag,
            const std::string& strategy_name, int max_degree, bool as_json, int jobs,
            bool deterministic) {
  SearchStrategy strategy;
  if (strategy_name == "exhaustive")
    strategy = SearchStrategy::exhaustive();
  else if (strategy_name == "monomial")
    strategy = SearchStrategy::monomial();
  else if (strategy_name == "diagonal")
    strategy = SearchStrategy::diagonal();
  else
    throw InputError("unknown strategy '" + strategy_name + "'");

  Prepared a = prepare(file1, field_flag, max_degree);
  Prepared b = prepare(file2, field_flag, max_degree);
  if (!(a.gb.field() == b.gb.field()))
    throw InputError("the two inputs use different fields; pass --field to unify");

  SearchOptions options;
  options.jobs = jobs;
  options.deterministic = deterministic;
  IsoCertificate cert = search_graded_iso(a.gb, b.gb, strategy, options);

  if (as_json) {
    json j = report_envelope("iso", a.gb.field(),
                             std::min(a.gb.truncation_degree(), b.gb.truncation_degree()),
                             std::min(a.gb.complete_upto(), b.gb.complete_upto()));
    j["inputs"] = {print_quiver(a.src), print_quiver(b.src)};
    j["strategy"] = strategy_name;
    j["deterministic"] = deterministic;
    j["certificate"] = json_of(cert);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "verdict: " << verdict_name(cert.verdict);
  if (cert.verdict != Verdict::Isomorphic)
    std::cout << " (up to degree " << std::min(a.gb.complete_upto(), b.gb.complete_upto()) << ")";
  std::cout << "\n";
  if (cert.failed) std::cout << "witness: " << cert.failed->describe() << "\n";
  if (cert.witness) std::cout << "witness: " << cert.witness->str() << "\n";
  for (const auto& s : cert.candidates)
    if (cert.verdict == Verdict::Candidates) std::cout << "candidate sigma " << s.str() << "\n";
  return kExitOk;
}

int run_extend(const std::string& file, const std::string& field_flag, int max_degree) {
  Prepared p = prepare(file, field_flag, max_degree);
  PolynomialExtension ext = polynomial_extension(p.gb);
  std::cout << print_quiver(p.src.name + "_poly", *ext.quiver, p.gb.field(),
                            ext.ideal.generators,
                            p.src.field_declared || !field_flag.empty());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path algebras of quivers modulo homogeneous relations: dimensions, invariants, "
               "and graded isomorphism search"};
  app.require_subcommand(1);

  std::string file, file2, field_flag, strategy = "exhaustive";
  int max_degree = 8;
  bool as_json = false, deterministic = false;
  int jobs = 1;

  auto* dims = app.add_subcommand("dims", "graded dimension matrices");
  dims->add_option("file", file)->required();
  dims->add_option("--max-degree", max_degree);
  dims->add_option("--field", field_flag);
  dims->add_flag("--json", as_json);

  auto* prune = app.add_subcommand("prune", "eliminate degree-0/1 relations");
  prune->add_option("file", file)->required();
  prune->add_option("--field", field_flag);

  auto* invariants = app.add_subcommand("invariants",
                                        "tangent dimension, degree-1 center, and (with a second "
                                        "file) the necessary-condition screen");
  invariants->add_option("file", file)->required();
  invariants->add_option("file2", file2);
  invariants->add_option("--max-degree", max_degree);
  invariants->add_option("--field", field_flag);
  invariants->add_flag("--json", as_json);

  auto* iso = app.add_subcommand("iso", "graded isomorphism search");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();
  iso->add_option("--field", field_flag);
  iso->add_option("--strategy", strategy)->check(CLI::IsMember({"exhaustive", "monomial", "diagonal"}));
  iso->add_option("--max-degree", max_degree);
  iso->add_option("--jobs", jobs);
  iso->add_flag("--deterministic", deterministic);
  iso->add_flag("--json", as_json);

  auto* extend = app.add_subcommand("extend", "polynomial extension A[t]");
  extend->add_option("file", file)->required();
  extend->add_option("--field", field_flag);
  extend->add_option("--max-degree", max_degree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (dims->parsed()) return run_dims(file, field_flag, max_degree, as_json);
    if (prune->parsed()) return run_prune(file, field_flag);
    if (invariants->parsed())
      return run_invariants(file, file2, field_flag, max_degree, as_json);
    if (iso->parsed())
      return run_iso(file, file2, field_flag, strategy, max_degree, as_json, jobs, deterministic);
    if (extend->parsed()) return run_extend(file, field_flag, max_degree);
  } catch (const qpa::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const TruncationError& e) {
    std::cerr << "truncation insufficient: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
