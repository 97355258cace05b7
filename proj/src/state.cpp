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

#include "qudit/state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qudit {

QuditSystem::QuditSystem(int q, int d) : q_(q), d_(d) {
    if (q < 1) {
        throw std::invalid_argument("number of qudits must be at least 1");
    }
    if (d < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
}

std::uint64_t QuditSystem::dense_dimension() const {
    std::uint64_t n = 1;
    for (int l = 0; l < q_; ++l) {
        n *= static_cast<std::uint64_t>(d_);
        if (n > kMaxDenseDimension) {
            throw std::length_error("d^q exceeds the dense amplitude limit");
        }
    }
    return n;
}

std::uint64_t QuditSystem::index_of(std::span<const int> ket) const {
    std::uint64_t index = 0;
    for (int symbol : ket) {
        index = index * static_cast<std::uint64_t>(d_) + static_cast<std::uint64_t>(symbol);
    }
    return index;
}

Ket QuditSystem::ket_of(std::uint64_t index) const {
    Ket ket(static_cast<std::size_t>(q_));
    for (int l = q_ - 1; l >= 0; --l) {
        ket[static_cast<std::size_t>(l)] = static_cast<int>(index % static_cast<std::uint64_t>(d_));
        index /= static_cast<std::uint64_t>(d_);
    }
    return ket;
}

PureState::PureState(QuditSystem system, std::vector<Term> terms) : system_(system) {
    std::map<Ket, std::size_t> position;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        auto &term = terms[t];
        if (term.ket.size() != static_cast<std::size_t>(system_.q())) {
            throw std::invalid_argument("term " + std::to_string(t + 1) + ": ket length " +
                                        std::to_string(term.ket.size()) + " != q = " +
                                        std::to_string(system_.q()));
        }
        for (std::size_t l = 0; l < term.ket.size(); ++l) {
            if (term.ket[l] < 0 || term.ket[l] >= system_.d()) {
                throw std::invalid_argument("term " + std::to_string(t + 1) + ": label " +
                                            std::to_string(term.ket[l]) + " at site " +
                                            std::to_string(l + 1) + " outside 0.." +
                                            std::to_string(system_.d() - 1));
            }
        }
        if (!std::isfinite(term.amplitude.real()) || !std::isfinite(term.amplitude.imag())) {
            throw std::invalid_argument("term " + std::to_string(t + 1) + ": non-finite amplitude");
        }
        auto [it, inserted] = position.try_emplace(term.ket, terms_.size());
        if (inserted) {
            terms_.push_back(std::move(term));
        } else {
            terms_[it->second].amplitude += term.amplitude;
        }
    }
    std::erase_if(terms_, [](const Term &term) { return term.amplitude == Complex{0.0, 0.0}; });
    if (terms_.empty()) {
        throw std::invalid_argument("state is empty after merging duplicate kets");
    }
}

PureState PureState::from_dense(QuditSystem system, const Eigen::VectorXcd &amplitudes,
                                double drop_below) {
    if (static_cast<std::uint64_t>(amplitudes.size()) != system.dense_dimension()) {
        throw std::invalid_argument("dense vector size does not match d^q");
    }
    const double floor = drop_below * amplitudes.cwiseAbs().maxCoeff();
    std::vector<Term> terms;
    for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
        if (std::abs(amplitudes[i]) > floor && amplitudes[i] != Complex{0.0, 0.0}) {
            terms.push_back({amplitudes[i], system.ket_of(static_cast<std::uint64_t>(i))});
        }
    }
    return PureState(system, std::move(terms));
}

double PureState::norm() const {
    double sum = 0.0;
    for (const auto &term : terms_) {
        sum += std::norm(term.amplitude);
    }
    return std::sqrt(sum);
}

Eigen::VectorXcd PureState::to_dense() const {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(system_.dense_dimension()));
    for (const auto &term : terms_) {
        psi[static_cast<Eigen::Index>(system_.index_of(term.ket))] = term.amplitude;
    }
    return psi;
}

PureState PureState::sorted() const {
    auto copy = *this;
    std::sort(copy.terms_.begin(), copy.terms_.end(),
              [](const Term &a, const Term &b) { return a.ket < b.ket; });
    return copy;
}

PureState normalize(const PureState &state) {
    const double n = state.norm();
    if (!(n > 0.0)) {
        throw std::invalid_argument("cannot normalize a zero-norm state");
    }
    std::vector<Term> terms(state.terms().begin(), state.terms().end());
    for (auto &term : terms) {
        term.amplitude /= n;
    }
    return PureState(state.system(), std::move(terms));
}

namespace {

void check_site(const QuditSystem &system, int site) {
    if (site < 0 || site >= system.q()) {
        throw std::out_of_range("site " + std::to_string(site + 1) + " outside 1.." +
                                std::to_string(system.q()));
    }
}

// Strides of the (left, site, right) view of a dense vector.
struct SiteView {
    Eigen::Index left;
    Eigen::Index right;
};

SiteView site_view(const QuditSystem &system, int site) {
    Eigen::Index left = 1;
    for (int l = 0; l < site; ++l) {
        left *= system.d();
    }
    Eigen::Index right = 1;
    for (int l = site + 1; l < system.q(); ++l) {
        right *= system.d();
    }
    return {left, right};
}

}  // namespace

namespace detail {

Eigen::MatrixXcd site_unfolding(const Eigen::VectorXcd &psi, const QuditSystem &system, int site) {
    check_site(system, site);
    const auto [left, right] = site_view(system, site);
    const Eigen::Index d = system.d();
    Eigen::MatrixXcd unfolded(d, left * right);
    for (Eigen::Index a = 0; a < left; ++a) {
        for (Eigen::Index s = 0; s < d; ++s) {
            for (Eigen::Index b = 0; b < right; ++b) {
                unfolded(s, a * right + b) = psi[(a * d + s) * right + b];
            }
        }
    }
    return unfolded;
}

Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd &psi, const QuditSystem &system, int site) {
    const Eigen::MatrixXcd unfolded = site_unfolding(psi, system, site);
    return unfolded * unfolded.adjoint();
}

void apply_local(Eigen::VectorXcd &psi, const QuditSystem &system, int site,
                 const Eigen::MatrixXcd &m) {
    check_site(system, site);
    if (m.rows() != system.d() || m.cols() != system.d()) {
        throw std::invalid_argument("local operator must be d x d");
    }
    const auto [left, right] = site_view(system, site);
    const Eigen::Index d = system.d();
    Eigen::VectorXcd fiber(d);
    for (Eigen::Index a = 0; a < left; ++a) {
        for (Eigen::Index b = 0; b < right; ++b) {
            for (Eigen::Index s = 0; s < d; ++s) {
                fiber[s] = psi[(a * d + s) * right + b];
            }
            const Eigen::VectorXcd out = m * fiber;
            for (Eigen::Index s = 0; s < d; ++s) {
                psi[(a * d + s) * right + b] = out[s];
            }
        }
    }
}

}  // namespace detail

LocalDensityMatrix reduced_density_matrix(const PureState &state, int site) {
    check_site(state.system(), site);
    // Sparse route: group terms by the ket with `site` removed.
    std::map<Ket, std::vector<const Term *>> groups;
    for (const auto &term : state.terms()) {
        Ket rest = term.ket;
        rest.erase(rest.begin() + site);
        groups[rest].push_back(&term);
    }
    const int d = state.d();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &[rest, members] : groups) {
        for (const Term *x : members) {
            for (const Term *y : members) {
                rho(x->ket[static_cast<std::size_t>(site)], y->ket[static_cast<std::size_t>(site)]) +=
                    x->amplitude * std::conj(y->amplitude);
            }
        }
    }
    return {site, rho};
}

bool is_stochastic(const PureState &state, double tol) {
    const int d = state.d();
    const Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    for (int site = 0; site < state.q(); ++site) {
        const auto rho = reduced_density_matrix(state, site);
        if ((rho.entries - target).cwiseAbs().maxCoeff() > tol) {
            return false;
        }
    }
    return true;
}

bool is_product(const PureState &state, double tol) {
    const int q = state.q();
    if (q < 2) {
        throw std::invalid_argument("product test needs at least two qudits");
    }
    if (q > 20) {
        throw std::length_error("product test is limited to q <= 20");
    }
    const Eigen::VectorXcd psi = state.to_dense();
    const auto &system = state.system();
    const std::uint64_t dim = system.dense_dimension();
    // Bipartitions are subsets containing site 0, excluding the full set.
    const std::uint32_t full = (std::uint32_t{1} << q) - 1;
    for (std::uint32_t mask = 1; mask < full; mask += 2) {
        Eigen::Index rows = 1;
        for (int l = 0; l < q; ++l) {
            if (mask & (std::uint32_t{1} << l)) {
                rows *= system.d();
            }
        }
        const Eigen::Index cols = static_cast<Eigen::Index>(dim) / rows;
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
        for (const auto &term : state.terms()) {
            Eigen::Index r = 0;
            Eigen::Index c = 0;
            for (int l = 0; l < q; ++l) {
                if (mask & (std::uint32_t{1} << l)) {
                    r = r * system.d() + term.ket[static_cast<std::size_t>(l)];
                } else {
                    c = c * system.d() + term.ket[static_cast<std::size_t>(l)];
                }
            }
            m(r, c) = term.amplitude;
        }
        const Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
        const auto &sv = svd.singularValues();
        if (sv.size() < 2 || sv[1] <= tol) {
            return true;
        }
    }
    return false;
}

PureState apply_local_operator(const PureState &state, int site, const Eigen::MatrixXcd &m) {
    check_site(state.system(), site);
    if (m.rows() != state.d() || m.cols() != state.d()) {
        throw std::invalid_argument("local operator must be " + std::to_string(state.d()) + " x " +
                                    std::to_string(state.d()));
    }
    Eigen::VectorXcd psi = state.to_dense();
    detail::apply_local(psi, state.system(), site, m);
    return PureState::from_dense(state.system(), psi, kAmplitudeFloor);
}

}  // namespace qudit
