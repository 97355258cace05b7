// Copyright 2026 The Qudit Balance Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDIT_REPORT_JSON_HPP
#define QUDIT_REPORT_JSON_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "qudit/balance.hpp"
#include "qudit/catalog.hpp"
#include "qudit/filtering.hpp"
#include "qudit/measures.hpp"
#include "qudit/verify.hpp"

namespace qudit {

/// {"verdict", "certificate", "balanced_support", "blocks"} with 1-based columns.
nlohmann::json to_json(const Classification &c);

nlohmann::json to_json(const NormalFormOutcome &outcome);

/// {"measure", "value", "raw": [re, im], "normalized"}.
nlohmann::json to_json(const MeasureValue &m);

/// One catalog line: {"q", "d", "L", "B", "n", "irreducible"}.
nlohmann::json to_json(const CatalogEntry &entry);
CatalogEntry catalog_entry_from_json(const nlohmann::json &j);

nlohmann::json to_json(const LengthBoundReport &report);
nlohmann::json to_json(const TheoremReport &report);

struct BDocument {
    BMatrix b;
    std::optional<BalanceCertificate> certificate;
};

/// {"B": [[...], ...], "d": int (optional, defaults to max label + 1), "n": [...] (optional)}.
BDocument parse_b_document(const std::string &text);

/// Plain-text rendering of a JSON payload: one "key: value" line per member,
/// nested arrays kept in compact JSON.
std::string render_human(const nlohmann::json &payload);

}  // namespace qudit

#endif  // QUDIT_REPORT_JSON_HPP
