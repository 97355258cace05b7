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

// Command-line front end: classify, normal-form, measures, generate,
// enumerate, verify. JSON is the source of truth; the human format is a
// flat rendering of the same payload.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qudit/balance.hpp"
#include "qudit/catalog.hpp"
#include "qudit/errors.hpp"
#include "qudit/filtering.hpp"
#include "qudit/measures.hpp"
#include "qudit/report_json.hpp"
#include "qudit/verify.hpp"

namespace {

using nlohmann::json;
using namespace qudit;

enum ExitCode : int {
    kOk = 0,
    kRuntimeError = 1,
    kInputError = 2,
    kIndeterminate = 3,
    kNoMeasure = 4,
    kNoCertificate = 5,
    kCapExceeded = 6,
};

struct NoCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double tol = kDefaultTolerance;
    double null_tol = 1e-6;
    int max_sweeps = 10000;
    std::string format = "human";
    std::uint64_t seed = 1;
    int cap_l = 24;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const json &payload, const RunConfig &config) {
    if (config.format == "json") {
        std::cout << payload.dump(2) << '\n';
    } else {
        std::cout << render_human(payload);
    }
}

NormalFormOptions normal_form_options(const RunConfig &config) {
    return {config.max_sweeps, config.tol, config.null_tol};
}

int cmd_classify(const std::string &path, const RunConfig &config) {
    const PureState state = parse_state(read_file(path));
    emit(to_json(classify(state, {config.tol, config.cap_l, Execution::Parallel})), config);
    return kOk;
}

int cmd_normal_form(const std::string &path, const RunConfig &config) {
    const PureState state = normalize(parse_state(read_file(path)));
    const NormalFormOutcome outcome = normal_form(state, normal_form_options(config));
    emit(to_json(outcome), config);
    return outcome.verdict == NormalFormVerdict::Indeterminate ? kIndeterminate : kOk;
}

int cmd_measures(const std::string &path, const RunConfig &config) {
    const PureState state = normalize(parse_state(read_file(path)));
    const auto measures = applicable_measures(state);
    if (measures.empty()) {
        std::cerr << "no implemented measure for q=" << state.q() << ", d=" << state.d() << '\n';
        return kNoMeasure;
    }
    json out = json::array();
    for (const auto &m : measures) {
        out.push_back(to_json(m));
    }
    emit(out, config);
    return kOk;
}

struct GenerateArgs {
    std::vector<int> ghz;
    std::string from_b;
    std::string output;
};

int cmd_generate(const GenerateArgs &args) {
    PureState state = [&] {
        if (!args.ghz.empty()) {
            const int q = args.ghz[0];
            const int d = args.ghz[1];
            if (q < 1 || d < 2) {
                throw FormatError("--ghz needs Q >= 1 and D >= 2");
            }
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(q));
            for (auto &row : rows) {
                for (int j = 0; j < d; ++j) {
                    row.push_back(j);
                }
            }
            const BMatrix b(d, rows);
            return construct_max_entangled(b, BalanceCertificate(std::vector<long long>(static_cast<std::size_t>(d), 1)));
        }
        const BDocument doc = parse_b_document(read_file(args.from_b));
        std::optional<BalanceCertificate> cert = doc.certificate;
        if (cert) {
            if (cert->size() != static_cast<std::size_t>(doc.b.length()) || !satisfies_balance(doc.b, cert->weights())) {
                throw FormatError("field \"n\" does not balance B");
            }
        } else {
            cert = find_certificate(doc.b);
        }
        if (!cert) {
            throw NoCertificate("B admits no balance certificate");
        }
        return construct_max_entangled(doc.b, *cert);
    }();
    const std::string text = serialize_state(state, 2) + "\n";
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output, std::ios::binary);
        if (!out || !(out << text)) {
            throw FormatError("cannot write " + args.output);
        }
    }
    return kOk;
}

struct EnumerateArgs {
    int q = 2;
    int d = 2;
    int max_length = 1;
    bool all = false;
};

int cmd_enumerate(const EnumerateArgs &args, const RunConfig &config) {
    const EnumerationCaps caps;
    std::vector<CatalogEntry> entries;
    if (args.all) {
        const int bound = (args.d - 1) * args.q + 1;
        if (args.max_length > bound + caps.slack) {
            throw CapExceeded("L_max exceeds (d-1)q+1+slack");
        }
        double kets = 1.0;
        for (int l = 0; l < args.q; ++l) {
            kets *= args.d;
        }
        for (int length = 1; length <= args.max_length && length <= kets; ++length) {
            for (auto &entry : catalog(args.q, args.d, length, caps)) {
                entries.push_back(std::move(entry));
            }
        }
    } else {
        entries = enumerate_irreducible(args.q, args.d, args.max_length, caps);
    }
    for (const auto &entry : entries) {
        if (config.format == "json") {
            std::cout << to_json(entry).dump() << '\n';
        } else {
            std::cout << render_human(to_json(entry)) << '\n';
        }
    }
    return kOk;
}

struct VerifyArgs {
    int theorem = 1;
    int q = 2;
    int d = 2;
    int samples = 100;
};

int cmd_verify(const VerifyArgs &args, const RunConfig &config) {
    SuiteConfig suite;
    suite.seed = config.seed;
    suite.samples = args.samples;
    suite.tol = config.tol;
    suite.cap_l = config.cap_l;
    suite.normal_form = normal_form_options(config);
    emit(to_json(verify_theorem(args.theorem, args.q, args.d, suite)), config);
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Balancedness classification and verification for multi-qudit pure states"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    app.add_option("--tol", config.tol, "stochasticity and rank tolerance")->check(CLI::PositiveNumber);
    app.add_option("--null-tol", config.null_tol, "null-cone norm threshold")->check(CLI::PositiveNumber);
    app.add_option("--max-sweeps", config.max_sweeps, "normal-form sweep limit")->check(CLI::PositiveNumber);
    app.add_option("--format", config.format, "output format")->check(CLI::IsMember({"human", "json"}));
    app.add_option("--seed", config.seed, "seed for randomized suites");
    app.add_option("--cap-L", config.cap_l, "largest L for subset searches")->check(CLI::PositiveNumber);

    std::string path;
    auto *classify_cmd = app.add_subcommand("classify", "classify a state document");
    classify_cmd->add_option("file", path, "state document")->required();
    auto *normal_cmd = app.add_subcommand("normal-form", "run local filtering to the normal form");
    normal_cmd->add_option("file", path, "state document")->required();
    auto *measures_cmd = app.add_subcommand("measures", "evaluate SL-invariant measures");
    measures_cmd->add_option("file", path, "state document")->required();

    GenerateArgs generate_args;
    auto *generate_cmd = app.add_subcommand("generate", "write a maximally entangled state document");
    auto *ghz = generate_cmd->add_option("--ghz", generate_args.ghz, "GHZ state on Q qudits of dimension D")
                    ->expected(2)
                    ->type_name("Q D");
    auto *from_b = generate_cmd->add_option("--from-b", generate_args.from_b, "B-matrix document");
    ghz->excludes(from_b);
    generate_cmd->add_option("-o,--output", generate_args.output, "output path (default stdout)");

    EnumerateArgs enumerate_args;
    auto *enumerate_cmd = app.add_subcommand("enumerate", "list canonical B-matrix classes as JSON lines");
    enumerate_cmd->add_option("Q", enumerate_args.q)->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("D", enumerate_args.d)->required()->check(CLI::Range(2, 64));
    enumerate_cmd->add_option("L_MAX", enumerate_args.max_length)->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--all", enumerate_args.all, "include reducible and unbalanced classes");

    VerifyArgs verify_args;
    auto *verify_cmd = app.add_subcommand("verify", "check one theorem at desk scale");
    verify_cmd->add_option("THEOREM", verify_args.theorem)->required()->check(CLI::Range(1, 5));
    verify_cmd->add_option("--q", verify_args.q)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--d", verify_args.d)->required()->check(CLI::Range(2, 64));
    verify_cmd->add_option("--samples", verify_args.samples)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*classify_cmd) {
            return cmd_classify(path, config);
        }
        if (*normal_cmd) {
            return cmd_normal_form(path, config);
        }
        if (*measures_cmd) {
            return cmd_measures(path, config);
        }
        if (*generate_cmd) {
            if (generate_args.ghz.empty() && generate_args.from_b.empty()) {
                throw FormatError("generate needs --ghz Q D or --from-b FILE");
            }
            return cmd_generate(generate_args);
        }
        if (*enumerate_cmd) {
            return cmd_enumerate(enumerate_args, config);
        }
        return cmd_verify(verify_args, config);
    } catch (const CapExceeded &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const NoCertificate &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNoCertificate;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
}
