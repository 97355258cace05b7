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

#include "qudit/filtering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qudit/errors.hpp"

namespace qudit {

namespace {

constexpr double kEigenvalueFloor = 1e-14;
constexpr double kConsistencyTolerance = 1e-8;

double wrap_angle(double angle) {
    return std::remainder(angle, 2.0 * std::numbers::pi);
}

// Restores det = 1 after an accumulation of round-off.
void renormalize_determinant(Eigen::MatrixXcd &m) {
    const Complex det = m.determinant();
    m *= std::pow(det, -1.0 / static_cast<double>(m.rows()));
}

}  // namespace

LocalFilter::LocalFilter(int site, Eigen::MatrixXcd matrix) : site_(site), matrix_(std::move(matrix)) {
    if (site_ < 0) {
        throw std::invalid_argument("filter site must be nonnegative");
    }
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw std::invalid_argument("filter matrix must be square");
    }
    if (std::abs(matrix_.determinant() - Complex{1.0, 0.0}) > 1e-10) {
        throw std::invalid_argument("filter determinant differs from 1");
    }
}

EqualizationResult equalize_amplitudes(const PureState &state, const BalanceCertificate &cert) {
    const BMatrix b = b_matrix(state);
    if (cert.size() != static_cast<std::size_t>(b.length()) || !satisfies_balance(b, cert.weights())) {
        throw std::invalid_argument("certificate does not match the state's support");
    }
    const int q = state.q();
    const int d = state.d();
    const int length = b.length();
    const auto terms = state.terms();
    // Diagonal entry s of the site-i filter is t^(z_{s;i} - z_{s-1;i}) with
    // z_{-1;i} = z_{d-1;i} = 0, so only z_{0..d-2;i} are unknowns.
    auto exponent_coefficient = [](int symbol, int k) { return (symbol == k ? 1.0 : 0.0) - (symbol == k + 1 ? 1.0 : 0.0); };
    const Eigen::Index unknowns = q * (d - 1);
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(length - 1, unknowns);
    Eigen::VectorXd magnitude_target(length - 1);
    Eigen::VectorXd phase_target(length - 1);
    for (int j = 1; j < length; ++j) {
        for (int i = 0; i < q; ++i) {
            for (int k = 0; k + 1 < d; ++k) {
                system(j - 1, i * (d - 1) + k) += exponent_coefficient(b(i, j), k) - exponent_coefficient(b(i, 0), k);
            }
        }
        const auto n0 = static_cast<double>(cert[0]);
        const auto nj = static_cast<double>(cert[static_cast<std::size_t>(j)]);
        magnitude_target[j - 1] = std::log(std::abs(terms[0].amplitude)) -
                                  std::log(std::abs(terms[static_cast<std::size_t>(j)].amplitude)) +
                                  0.5 * (std::log(nj) - std::log(n0));
        phase_target[j - 1] = wrap_angle(std::arg(terms[0].amplitude) - std::arg(terms[static_cast<std::size_t>(j)].amplitude));
    }
    Eigen::VectorXd z = Eigen::VectorXd::Zero(unknowns);
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(unknowns);
    double residual = 0.0;
    double phase_residual = 0.0;
    if (length > 1) {
        const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(system);
        z = cod.solve(magnitude_target);
        phi = cod.solve(phase_target);
        residual = (system * z - magnitude_target).norm();
        const Eigen::VectorXd phase_error = system * phi - phase_target;
        for (Eigen::Index j = 0; j < phase_error.size(); ++j) {
            phase_residual = std::max(phase_residual, std::abs(wrap_angle(phase_error[j])));
        }
    }
    if (!(residual <= kConsistencyTolerance)) {
        throw InconsistentSystemError(residual);
    }

    std::vector<LocalFilter> filters;
    for (int i = 0; i < q; ++i) {
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
        for (int s = 0; s < d; ++s) {
            double log_magnitude = 0.0;
            double angle = 0.0;
            for (int k = 0; k + 1 < d; ++k) {
                log_magnitude += exponent_coefficient(s, k) * z[i * (d - 1) + k];
                angle += exponent_coefficient(s, k) * phi[i * (d - 1) + k];
            }
            diag(s, s) = std::polar(std::exp(log_magnitude), angle);
        }
        filters.emplace_back(i, std::move(diag));
    }
    std::vector<Term> filtered(terms.begin(), terms.end());
    for (auto &term : filtered) {
        for (int i = 0; i < q; ++i) {
            const int s = term.ket[static_cast<std::size_t>(i)];
            term.amplitude *= filters[static_cast<std::size_t>(i)].matrix()(s, s);
        }
    }
    PureState result = normalize(PureState(state.system(), std::move(filtered)));
    double off_diagonal = 0.0;
    for (int i = 0; i < q; ++i) {
        const auto rho = reduced_density_matrix(result, i);
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                if (r != c) {
                    off_diagonal = std::max(off_diagonal, std::abs(rho.entries(r, c)));
                }
            }
        }
    }
    return EqualizationResult{std::move(filters), std::move(result), residual, phase_residual, off_diagonal,
                              off_diagonal > kConsistencyTolerance};
}

NormalFormOutcome normal_form(const PureState &state, const NormalFormOptions &options) {
    if (options.max_sweeps < 1) {
        throw std::invalid_argument("max_sweeps must be at least 1");
    }
    if (!(options.tol > 0.0) || !(options.null_tol > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    const QuditSystem &system = state.system();
    const int q = system.q();
    const int d = system.d();
    Eigen::VectorXcd psi = state.to_dense();
    psi /= psi.norm();
    std::vector<Eigen::MatrixXcd> accumulated(static_cast<std::size_t>(q), Eigen::MatrixXcd::Identity(d, d));
    const Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);

    NormalFormOutcome outcome;
    outcome.norm_trajectory.push_back(psi.norm());
    auto finish = [&](NormalFormVerdict verdict, int sweeps) {
        outcome.verdict = verdict;
        outcome.iterations = sweeps;
        outcome.final_norm = psi.norm();
        for (int i = 0; i < q; ++i) {
            outcome.filters.emplace_back(i, accumulated[static_cast<std::size_t>(i)]);
        }
        if (verdict == NormalFormVerdict::Converged) {
            outcome.state = PureState::from_dense(system, psi / psi.norm(), kAmplitudeFloor);
        }
        return outcome;
    };

    for (int sweep = 0;; ++sweep) {
        bool converged = true;
        for (int i = 0; i < q && converged; ++i) {
            const Eigen::MatrixXcd rho = detail::partial_trace(psi, system, i);
            const double trace = rho.trace().real();
            converged = ((rho / trace) - target).cwiseAbs().maxCoeff() <= options.tol;
        }
        if (converged) {
            return finish(NormalFormVerdict::Converged, sweep);
        }
        if (sweep == options.max_sweeps) {
            return finish(NormalFormVerdict::Indeterminate, sweep);
        }
        for (int i = 0; i < q; ++i) {
            const Eigen::MatrixXcd rho = detail::partial_trace(psi, system, i);
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho);
            const Eigen::VectorXd &lambda = eig.eigenvalues();
            const double trace = lambda.sum();
            if (!(lambda.minCoeff() / trace > kEigenvalueFloor)) {
                throw RankDeficientError(i, lambda.minCoeff() / trace);
            }
            // det(rho)^(1/(2d)) * rho^(-1/2), evaluated in log space.
            const double log_det = lambda.array().log().sum();
            const double scale = std::exp(log_det / (2.0 * d));
            const Eigen::VectorXd inv_sqrt = lambda.array().rsqrt() * scale;
            const Eigen::MatrixXcd filter =
                eig.eigenvectors() * inv_sqrt.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
            detail::apply_local(psi, system, i, filter);
            auto &acc = accumulated[static_cast<std::size_t>(i)];
            acc = filter * acc;
            renormalize_determinant(acc);
        }
        const double norm = psi.norm();
        outcome.norm_trajectory.push_back(norm);
        if (norm < options.null_tol) {
            return finish(NormalFormVerdict::NullCone, sweep + 1);
        }
    }
}

std::vector<NormalFormOutcome> normal_form_batch(std::span<const PureState> states, const NormalFormOptions &options,
                                                 Execution exec) {
    std::vector<NormalFormOutcome> outcomes(states.size());
    for_each_index(exec, states.size(), [&](std::size_t k) { outcomes[k] = normal_form(states[k], options); });
    return outcomes;
}

std::vector<Eigen::MatrixXcd> compose_filters(std::span<const LocalFilter> filters, const QuditSystem &system) {
    std::vector<Eigen::MatrixXcd> product(static_cast<std::size_t>(system.q()),
                                          Eigen::MatrixXcd::Identity(system.d(), system.d()));
    for (const auto &f : filters) {
        if (f.site() >= system.q()) {
            throw std::out_of_range("filter site outside the system");
        }
        if (f.matrix().rows() != system.d()) {
            throw std::invalid_argument("filter dimension does not match the local dimension");
        }
        auto &p = product[static_cast<std::size_t>(f.site())];
        p = f.matrix() * p;
    }
    return product;
}

const char *verdict_name(NormalFormVerdict verdict) {
    switch (verdict) {
        case NormalFormVerdict::Converged:
            return "converged";
        case NormalFormVerdict::NullCone:
            return "null_cone";
        case NormalFormVerdict::Indeterminate:
            return "indeterminate";
    }
    return "unknown";
}

}  // namespace qudit
