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

#include "qpa/report.hpp"

namespace qpa {

using nlohmann::json;

json json_of(const NatMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

json json_of(const DimProfile& p) {
  json degrees = json::array();
  for (const auto& m : p.by_degree) degrees.push_back(json_of(m));
  return degrees;
}

json json_of(const Permutation& sigma) { return sigma.images(); }

json json_of(const GradedMap& phi) {
  json arrows = json::object();
  for (int a = 0; a < static_cast<int>(phi.source->arrow_count()); ++a) {
    const Arrow& arrow = phi.source->arrow(a);
    const auto& block_arrows = phi.source->arrows_between(arrow.source, arrow.target);
    std::size_t k = 0;
    while (block_arrows[k] != a) ++k;
    const auto& images =
        phi.target->arrows_between(phi.sigma(arrow.source), phi.sigma(arrow.target));
    json combo = json::array();
    for (std::size_t l = 0; l < images.size(); ++l) {
      const Scalar& c = phi.blocks[arrow.source][arrow.target].at(k, l);
      if (c.is_zero()) continue;
      combo.push_back({{"coeff", c.str()}, {"arrow", phi.target->arrow(images[l]).id}});
    }
    arrows[arrow.id] = combo;
  }
  return json{{"sigma", json_of(phi.sigma)}, {"arrow_images", arrows}};
}

json json_of(const FailedInvariant& w) {
  json j{{"kind", [&] {
            switch (w.kind) {
              case FailedInvariant::Kind::VertexCount: return "vertex_count";
              case FailedInvariant::Kind::AdjacencyConjugacy: return "adjacency_conjugacy";
              case FailedInvariant::Kind::DimensionMatrix: return "dimension_matrix";
              case FailedInvariant::Kind::SearchExhausted: return "search_exhausted";
            }
            return "?";
          }()},
         {"description", w.describe()}};
  if (w.degree >= 0) j["degree"] = w.degree;
  if (!w.lhs.empty()) j["lhs"] = json_of(w.lhs);
  if (!w.rhs.empty()) j["rhs"] = json_of(w.rhs);
  if (w.kind == FailedInvariant::Kind::SearchExhausted) {
    j["sigmas_tried"] = w.sigmas_tried;
    j["maps_tried"] = w.maps_tried;
  }
  return j;
}

json json_of(const IsoCertificate& cert) {
  json j{{"verdict", verdict_name(cert.verdict)}};
  if (cert.failed) j["witness"] = json_of(*cert.failed);
  if (!cert.candidates.empty()) {
    json sigmas = json::array();
    for (const auto& s : cert.candidates) sigmas.push_back(json_of(s));
    j["candidates"] = sigmas;
  }
  if (cert.witness) j["witness_map"] = json_of(*cert.witness);
  return j;
}

json report_envelope(const std::string& operation, Field field, int truncation_degree,
                     int complete_upto) {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"operation", operation},
              {"field", field.name()},
              {"truncation_degree", truncation_degree},
              {"complete_upto", complete_upto}};
}

}  // namespace qpa
