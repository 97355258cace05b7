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

#include "qudit/report_json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qudit/errors.hpp"

namespace qudit {

using nlohmann::json;

namespace {

json one_based(const std::vector<int> &columns) {
    json out = json::array();
    for (int k : columns) {
        out.push_back(k + 1);
    }
    return out;
}

json all_columns(std::size_t length) {
    std::vector<int> columns(length);
    std::iota(columns.begin(), columns.end(), 0);
    return one_based(columns);
}

json certificate_json(const BalanceCertificate &cert) {
    return std::vector<long long>(cert.weights().begin(), cert.weights().end());
}

json matrix_json(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

json to_json(const Classification &c) {
    json out = {{"verdict", verdict_name(c)},
                {"certificate", nullptr},
                {"balanced_support", json::array()},
                {"blocks", json::array()}};
    if (const auto *irreducible = std::get_if<IrreduciblyBalanced>(&c)) {
        out["certificate"] = certificate_json(irreducible->certificate);
        out["balanced_support"] = all_columns(irreducible->certificate.size());
        out["blocks"] = json::array({all_columns(irreducible->certificate.size())});
    } else if (const auto *reducible = std::get_if<BalancedReducible>(&c)) {
        out["certificate"] = certificate_json(reducible->certificate);
        out["balanced_support"] = all_columns(reducible->certificate.size());
        for (const auto &block : reducible->decomposition.blocks) {
            out["blocks"].push_back(one_based(block));
        }
        out["remainder"] = one_based(reducible->decomposition.remainder);
    } else if (const auto *partly = std::get_if<PartlyBalanced>(&c)) {
        out["balanced_support"] = one_based(partly->balanced_support);
        out["irreducible"] = partly->irreducible;
    }
    return out;
}

json to_json(const NormalFormOutcome &outcome) {
    json out = {{"verdict", verdict_name(outcome.verdict)},
                {"iterations", outcome.iterations},
                {"final_norm", outcome.final_norm},
                {"norm_trajectory", outcome.norm_trajectory}};
    json filters = json::array();
    for (const auto &f : outcome.filters) {
        filters.push_back({{"site", f.site() + 1}, {"matrix", matrix_json(f.matrix())}});
    }
    out["filters"] = filters;
    out["state"] = outcome.state ? json::parse(serialize_state(*outcome.state, -1)) : json(nullptr);
    return out;
}

json to_json(const MeasureValue &m) {
    return {{"measure", m.name},
            {"value", m.value},
            {"raw", {m.raw.real(), m.raw.imag()}},
            {"normalized", m.normalized ? json(*m.normalized) : json(nullptr)}};
}

json to_json(const CatalogEntry &entry) {
    const BMatrix &b = entry.b.matrix();
    return {{"q", b.q()},
            {"d", b.d()},
            {"L", b.length()},
            {"B", b.rows()},
            {"n", entry.certificate ? certificate_json(*entry.certificate) : json(nullptr)},
            {"irreducible", entry.irreducible}};
}

CatalogEntry catalog_entry_from_json(const json &j) {
    try {
        const BMatrix b(j.at("d").get<int>(), j.at("B").get<std::vector<std::vector<int>>>());
        if (b.q() != j.at("q").get<int>() || b.length() != j.at("L").get<int>()) {
            throw FormatError("catalog entry: q/L do not match B");
        }
        std::optional<BalanceCertificate> cert;
        if (!j.at("n").is_null()) {
            cert = BalanceCertificate(j.at("n").get<std::vector<long long>>());
        }
        return CatalogEntry{CanonicalBMatrix(b), std::move(cert), j.at("irreducible").get<bool>()};
    } catch (const json::exception &e) {
        throw FormatError(std::string("catalog entry: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("catalog entry: ") + e.what());
    }
}

json to_json(const LengthBoundReport &report) {
    json lengths = json::array();
    for (const auto &count : report.lengths) {
        lengths.push_back({{"L", count.length}, {"classes", count.classes}, {"balanced", count.balanced},
                           {"irreducible", count.irreducible}});
    }
    json counterexamples = json::array();
    for (const auto &b : report.counterexamples) {
        counterexamples.push_back(b.rows());
    }
    return {{"q", report.q},           {"d", report.d},
            {"bound", report.bound},   {"passed", report.passed()},
            {"lengths", lengths},      {"counterexamples", counterexamples}};
}

json to_json(const TheoremReport &report) {
    return {{"theorem", report.theorem},
            {"q", report.q},
            {"d", report.d},
            {"passed", report.passed},
            {"cases", report.cases},
            {"details", report.details},
            {"counterexamples", report.counterexamples}};
}

BDocument parse_b_document(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("B") || !doc.at("B").is_array()) {
        throw FormatError("field \"B\" must be an array of rows");
    }
    std::vector<std::vector<int>> rows;
    try {
        rows = doc.at("B").get<std::vector<std::vector<int>>>();
    } catch (const json::exception &) {
        throw FormatError("field \"B\" must hold integer rows");
    }
    int d = 0;
    if (doc.contains("d")) {
        if (!doc.at("d").is_number_integer()) {
            throw FormatError("field \"d\" must be an integer");
        }
        d = doc.at("d").get<int>();
    } else {
        for (const auto &row : rows) {
            for (int v : row) {
                d = std::max(d, v + 1);
            }
        }
        d = std::max(d, 2);
    }
    try {
        BDocument out{BMatrix(d, rows), std::nullopt};
        if (doc.contains("n") && !doc.at("n").is_null()) {
            out.certificate = BalanceCertificate(doc.at("n").get<std::vector<long long>>());
        }
        return out;
    } catch (const json::exception &e) {
        throw FormatError(std::string("field \"n\": ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

std::string render_human(const json &payload) {
    std::ostringstream out;
    if (payload.is_array()) {
        for (std::size_t k = 0; k < payload.size(); ++k) {
            if (k > 0) {
                out << '\n';
            }
            out << render_human(payload[k]);
        }
        return out.str();
    }
    if (!payload.is_object()) {
        return payload.dump() + "\n";
    }
    for (const auto &[key, value] : payload.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return out.str();
}

}  // namespace qudit
