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

#include <string>

#include "json.hpp"
#include "qudit/errors.hpp"
#include "qudit/state.hpp"

namespace qudit {

using nlohmann::json;

namespace {

int require_int(const json &doc, const char *key) {
    if (!doc.contains(key)) {
        throw FormatError(std::string("missing field \"") + key + "\"");
    }
    const auto &value = doc.at(key);
    if (!value.is_number_integer()) {
        throw FormatError(std::string("field \"") + key + "\" must be an integer");
    }
    return value.get<int>();
}

double read_number(const json &term, const char *key, const std::string &where, bool required) {
    if (!term.contains(key)) {
        if (required) {
            throw FormatError(where + ": missing field \"" + key + "\"");
        }
        return 0.0;
    }
    const auto &value = term.at(key);
    if (!value.is_number()) {
        throw FormatError(where + ".\"" + key + "\" must be a number");
    }
    return value.get<double>();
}

}  // namespace

PureState parse_state(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw FormatError("state document must be a JSON object");
    }
    const int d = require_int(doc, "d");
    const int q = require_int(doc, "q");
    if (q < 1) {
        throw FormatError("field \"q\" must be >= 1");
    }
    if (d < 2) {
        throw FormatError("field \"d\" must be >= 2");
    }
    if (!doc.contains("terms") || !doc.at("terms").is_array()) {
        throw FormatError("field \"terms\" must be an array");
    }
    std::vector<Term> terms;
    const auto &items = doc.at("terms");
    for (std::size_t t = 0; t < items.size(); ++t) {
        const std::string where = "terms[" + std::to_string(t) + "]";
        const auto &item = items[t];
        if (!item.is_object()) {
            throw FormatError(where + " must be an object");
        }
        const double re = read_number(item, "re", where, true);
        const double im = read_number(item, "im", where, false);
        if (!item.contains("ket") || !item.at("ket").is_array()) {
            throw FormatError(where + ".\"ket\" must be an array");
        }
        Ket ket;
        for (std::size_t l = 0; l < item.at("ket").size(); ++l) {
            const auto &entry = item.at("ket")[l];
            if (!entry.is_number_integer()) {
                throw FormatError(where + ".ket[" + std::to_string(l) + "] must be an integer");
            }
            const int symbol = entry.get<int>();
            if (symbol < 0 || symbol >= d) {
                throw FormatError(where + ".ket[" + std::to_string(l) + "]: label " +
                                  std::to_string(symbol) + " out of range 0.." + std::to_string(d - 1));
            }
            ket.push_back(symbol);
        }
        if (ket.size() != static_cast<std::size_t>(q)) {
            throw FormatError(where + ".ket has length " + std::to_string(ket.size()) +
                              ", expected q = " + std::to_string(q));
        }
        terms.push_back({Complex{re, im}, std::move(ket)});
    }
    try {
        return PureState(QuditSystem(q, d), std::move(terms));
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

std::string serialize_state(const PureState &state, int indent) {
    json doc;
    doc["d"] = state.d();
    doc["q"] = state.q();
    doc["terms"] = json::array();
    const PureState ordered = state.sorted();
    for (const auto &term : ordered.terms()) {
        doc["terms"].push_back({{"re", term.amplitude.real()}, {"im", term.amplitude.imag()}, {"ket", term.ket}});
    }
    return doc.dump(indent);
}

}  // namespace qudit
