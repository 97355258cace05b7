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

#include "qudit/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qudit/errors.hpp"

namespace qudit {

using nlohmann::json;

namespace {

constexpr double kEqualizationTolerance = 1e-8;
constexpr double kMonotoneSlack = 1e-12;
// Amplitudes below this fraction of the largest are treated as outside the support.
constexpr double kSupportFloor = 1e-9;

json b_to_json(const BMatrix &b) { return b.rows(); }

PureState support_state(const PureState &state) {
    double largest = 0.0;
    for (const auto &term : state.terms()) {
        largest = std::max(largest, std::abs(term.amplitude));
    }
    std::vector<Term> kept;
    for (const auto &term : state.terms()) {
        if (std::abs(term.amplitude) > kSupportFloor * largest) {
            kept.push_back(term);
        }
    }
    return PureState(state.system(), std::move(kept));
}

TheoremReport make_report(int theorem, int q, int d) {
    TheoremReport report;
    report.theorem = theorem;
    report.q = q;
    report.d = d;
    return report;
}

bool non_increasing(const std::vector<double> &trajectory) {
    for (std::size_t k = 1; k < trajectory.size(); ++k) {
        if (trajectory[k] > trajectory[k - 1] + kMonotoneSlack) {
            return false;
        }
    }
    return true;
}

TheoremReport product_states_not_irreducible(int q, int d, const SuiteConfig &config) {
    if (q < 2) {
        throw std::invalid_argument("product states need q >= 2");
    }
    TheoremReport report = make_report(1, q, d);
    std::mt19937_64 rng(config.seed);
    std::size_t support_balanced = 0;
    for (int s = 0; s < config.samples; ++s) {
        const PureState state = random_product_state(q, d, rng, s % 2 == 0);
        const auto verdict = classify(state, {config.tol, config.cap_l, config.exec});
        const BMatrix b = b_matrix(state);
        bool support_irreducible = false;
        if (const auto cert = find_certificate(b)) {
            ++support_balanced;
            support_irreducible = is_irreducible(b, *cert);
        }
        if (std::holds_alternative<IrreduciblyBalanced>(verdict) || support_irreducible) {
            report.counterexamples.push_back(serialize_state(state, -1));
        }
        ++report.cases;
    }
    report.details = {{"samples", report.cases}, {"balanced_supports", support_balanced}};
    report.passed = report.counterexamples.empty() && report.cases > 0;
    return report;
}

TheoremReport stochastic_states_balanced(int q, int d, const SuiteConfig &config) {
    TheoremReport report = make_report(2, q, d);
    std::mt19937_64 rng(config.seed);
    const auto states = catalog_sample(q, d, config.samples, rng, config.caps, config.exec);
    const auto outcomes = normal_form_batch(states, config.normal_form, config.exec);
    std::size_t not_converged = 0;
    for (const auto &outcome : outcomes) {
        if (outcome.verdict != NormalFormVerdict::Converged) {
            ++not_converged;
            continue;
        }
        ++report.cases;
        const PureState support = support_state(*outcome.state);
        if (!is_stochastic(normalize(support), config.normal_form.tol * 10) || !find_certificate(b_matrix(support))) {
            report.counterexamples.push_back(serialize_state(support, -1));
        }
    }
    report.details = {{"sampled", states.size()}, {"converged", report.cases}, {"not_converged", not_converged}};
    report.passed = report.counterexamples.empty() && report.cases > 0;
    return report;
}

TheoremReport length_bound(int q, int d, const SuiteConfig &config) {
    TheoremReport report = make_report(3, q, d);
    const auto bound = verify_length_bound(q, d, config.caps, config.exec);
    for (const auto &count : bound.lengths) {
        report.cases += count.classes;
    }
    for (const auto &b : bound.counterexamples) {
        report.counterexamples.push_back(b_to_json(b).dump());
    }
    report.details = {{"bound", bound.bound}};
    json lengths = json::array();
    for (const auto &count : bound.lengths) {
        lengths.push_back({{"L", count.length}, {"classes", count.classes}, {"balanced", count.balanced},
                           {"irreducible", count.irreducible}});
    }
    report.details["lengths"] = lengths;
    report.passed = bound.passed();
    return report;
}

TheoremReport equalization(int q, int d, const SuiteConfig &config) {
    TheoremReport report = make_report(4, q, d);
    std::mt19937_64 rng(config.seed);
    const auto states = catalog_sample(q, d, config.samples, rng, config.caps, config.exec);
    double worst_residual = 0.0;
    double worst_diagonal = 0.0;
    double worst_det = 0.0;
    std::size_t off_diagonal_flags = 0;
    for (const auto &state : states) {
        ++report.cases;
        const BMatrix b = b_matrix(state);
        const auto cert = find_certificate(b);
        bool ok = cert.has_value();
        if (ok) {
            try {
                const auto result = equalize_amplitudes(state, *cert);
                worst_residual = std::max(worst_residual, result.residual);
                for (int i = 0; i < q; ++i) {
                    const auto rho = reduced_density_matrix(result.state, i);
                    for (int s = 0; s < d; ++s) {
                        worst_diagonal = std::max(worst_diagonal, std::abs(rho.entries(s, s).real() - 1.0 / d));
                    }
                }
                for (const auto &m : compose_filters(result.filters, state.system())) {
                    worst_det = std::max(worst_det, std::abs(m.determinant() - Complex{1.0, 0.0}));
                }
                if (result.off_diagonal_flag) {
                    ++off_diagonal_flags;
                }
                ok = worst_residual <= kEqualizationTolerance && worst_diagonal <= kEqualizationTolerance &&
                     worst_det <= kEqualizationTolerance && b_matrix(result.state) == b;
            } catch (const InconsistentSystemError &) {
                ok = false;
            }
        }
        if (!ok) {
            report.counterexamples.push_back(serialize_state(state, -1));
        }
    }
    report.details = {{"max_residual", worst_residual},
                      {"max_diagonal_error", worst_diagonal},
                      {"max_det_error", worst_det},
                      {"off_diagonal_flags", off_diagonal_flags}};
    report.passed = report.counterexamples.empty() && report.cases > 0;
    return report;
}

TheoremReport normal_form_robust(int q, int d, const SuiteConfig &config) {
    TheoremReport report = make_report(5, q, d);
    std::mt19937_64 rng(config.seed);
    const auto states = catalog_sample(q, d, config.samples, rng, config.caps, config.exec);
    const auto outcomes = normal_form_batch(states, config.normal_form, config.exec);
    int max_sweeps = 0;
    std::size_t converged = 0;
    std::size_t null_cone = 0;
    std::size_t non_monotone = 0;
    for (std::size_t k = 0; k < states.size(); ++k) {
        ++report.cases;
        const auto &outcome = outcomes[k];
        max_sweeps = std::max(max_sweeps, outcome.iterations);
        converged += outcome.verdict == NormalFormVerdict::Converged;
        null_cone += outcome.verdict == NormalFormVerdict::NullCone;
        non_monotone += !non_increasing(outcome.norm_trajectory);
        if (outcome.verdict != NormalFormVerdict::Converged || !non_increasing(outcome.norm_trajectory)) {
            report.counterexamples.push_back(serialize_state(states[k], -1));
        }
    }
    report.details = {{"max_sweeps_used", max_sweeps},
                      {"converged", converged},
                      {"null_cone", null_cone},
                      {"indeterminate", report.cases - converged - null_cone},
                      {"non_monotone", non_monotone}};
    report.passed = report.counterexamples.empty() && report.cases > 0;
    return report;
}

}  // namespace

PureState random_product_state(int q, int d, std::mt19937_64 &rng, bool full_support) {
    std::uniform_real_distribution<double> log_magnitude(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<std::vector<Complex>> local(static_cast<std::size_t>(q), std::vector<Complex>(static_cast<std::size_t>(d)));
    for (auto &v : local) {
        unsigned mask = (1u << d) - 1;
        if (!full_support) {
            std::uniform_int_distribution<unsigned> pick(1, mask);
            mask = pick(rng);
        }
        for (int s = 0; s < d; ++s) {
            const double m = std::exp(log_magnitude(rng));
            const double a = phase(rng);
            v[static_cast<std::size_t>(s)] = (mask & (1u << s)) ? std::polar(m, a) : Complex{0.0, 0.0};
        }
    }
    const QuditSystem system(q, d);
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(system.dense_dimension()));
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        const Ket ket = system.ket_of(static_cast<std::uint64_t>(i));
        Complex a{1.0, 0.0};
        for (int l = 0; l < q; ++l) {
            a *= local[static_cast<std::size_t>(l)][static_cast<std::size_t>(ket[static_cast<std::size_t>(l)])];
        }
        psi[i] = a;
    }
    return normalize(PureState::from_dense(system, psi));
}

PureState random_amplitude_state(const BMatrix &b, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> log_magnitude(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<Term> terms;
    for (int k = 0; k < b.length(); ++k) {
        const double m = std::exp(log_magnitude(rng));
        terms.push_back({std::polar(m, phase(rng)), b.column(k)});
    }
    return normalize(PureState(QuditSystem(b.q(), b.d()), std::move(terms)));
}

std::vector<PureState> catalog_sample(int q, int d, int count, std::mt19937_64 &rng, const EnumerationCaps &caps,
                                      Execution exec) {
    const auto entries = enumerate_irreducible(q, d, (d - 1) * q + 1, caps, exec);
    std::vector<PureState> states;
    if (entries.empty()) {
        return states;
    }
    for (int s = 0; s < count; ++s) {
        states.push_back(random_amplitude_state(entries[static_cast<std::size_t>(s) % entries.size()].b.matrix(), rng));
    }
    return states;
}

TheoremReport verify_theorem(int theorem, int q, int d, const SuiteConfig &config) {
    switch (theorem) {
        case 1:
            return product_states_not_irreducible(q, d, config);
        case 2:
            return stochastic_states_balanced(q, d, config);
        case 3:
            return length_bound(q, d, config);
        case 4:
            return equalization(q, d, config);
        case 5:
            return normal_form_robust(q, d, config);
        default:
            throw std::invalid_argument("theorem id must be in 1..5, got " + std::to_string(theorem));
    }
}

}  // namespace qudit
