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

#ifndef QPA_REPORT_HPP_
#define QPA_REPORT_HPP_

#include <nlohmann/json.hpp>

#include "qpa/iso_search.hpp"

namespace qpa {

inline constexpr const char* kToolName = "qpa";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json json_of(const NatMatrix& m);
nlohmann::json json_of(const DimProfile& p);
nlohmann::json json_of(const Permutation& sigma);
nlohmann::json json_of(const GradedMap& phi);
nlohmann::json json_of(const FailedInvariant& w);
nlohmann::json json_of(const IsoCertificate& cert);

/// Common envelope: tool version, operation name, field, truncation data.
nlohmann::json report_envelope(const std::string& operation, Field field, int truncation_degree,
                               int complete_upto);

}  // namespace qpa

#endif  // QPA_REPORT_HPP_
