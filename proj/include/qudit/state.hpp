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

#ifndef QUDIT_STATE_HPP
#define QUDIT_STATE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qudit {

using Complex = std::complex<double>;
using Ket = std::vector<int>;

/// Default tolerance for stochasticity and numerical rank tests.
inline constexpr double kDefaultTolerance = 1e-9;

/// Dense amplitude vectors are refused beyond this many entries.
inline constexpr std::uint64_t kMaxDenseDimension = std::uint64_t{1} << 24;

/// q qudits of a common local dimension d (d = 2S + 1 for spin S).
class QuditSystem {
   public:
    QuditSystem(int q, int d);

    int q() const noexcept { return q_; }
    int d() const noexcept { return d_; }

    /// d^q; throws std::length_error if it exceeds kMaxDenseDimension.
    std::uint64_t dense_dimension() const;

    /// Row-major index of a ket (site 0 most significant).
    std::uint64_t index_of(std::span<const int> ket) const;
    Ket ket_of(std::uint64_t index) const;

    friend bool operator==(const QuditSystem &, const QuditSystem &) = default;

   private:
    int q_;
    int d_;
};

struct Term {
    Complex amplitude;
    Ket ket;
};

/// A superposition of distinct computational product kets.
///
/// Construction merges duplicate kets (summing amplitudes, keeping the position
/// of the first occurrence) and drops terms whose amplitude is exactly zero.
/// Throws std::invalid_argument for malformed kets or when nothing survives.
class PureState {
   public:
    PureState(QuditSystem system, std::vector<Term> terms);

    /// Builds a state from a dense amplitude vector; entries with
    /// |a| <= drop_below * max|a| are omitted. Terms come out in ket order.
    static PureState from_dense(QuditSystem system, const Eigen::VectorXcd &amplitudes,
                                double drop_below = 0.0);

    const QuditSystem &system() const noexcept { return system_; }
    int q() const noexcept { return system_.q(); }
    int d() const noexcept { return system_.d(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    /// Number of product terms L.
    std::size_t length() const noexcept { return terms_.size(); }
    double norm() const;

    Eigen::VectorXcd to_dense() const;

    /// Same terms, sorted lexicographically by ket.
    PureState sorted() const;

   private:
    QuditSystem system_;
    std::vector<Term> terms_;
};

struct LocalDensityMatrix {
    int site;
    Eigen::MatrixXcd entries;
};

/// Relative amplitude floor used when a dense result is turned back into terms.
inline constexpr double kAmplitudeFloor = 1e-14;

PureState normalize(const PureState &state);

/// Partial trace over every site except `site` (0-based).
LocalDensityMatrix reduced_density_matrix(const PureState &state, int site);

/// True iff every single-site reduction is within tol (max-norm) of identity/d.
bool is_stochastic(const PureState &state, double tol = kDefaultTolerance);

/// True iff some bipartition of the sites has a rank-1 matricization.
/// Requires q >= 2 and q <= 20.
bool is_product(const PureState &state, double tol = kDefaultTolerance);

/// Contracts the amplitude tensor with m on `site`. The result is not renormalized.
PureState apply_local_operator(const PureState &state, int site, const Eigen::MatrixXcd &m);

namespace detail {

/// d x d^(q-1) matricization with `site` as the row index.
Eigen::MatrixXcd site_unfolding(const Eigen::VectorXcd &psi, const QuditSystem &system, int site);

/// Reduced matrix of an unnormalized dense vector (trace equals the squared norm).
Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd &psi, const QuditSystem &system, int site);

/// In-place application of a local operator on a dense vector.
void apply_local(Eigen::VectorXcd &psi, const QuditSystem &system, int site,
                 const Eigen::MatrixXcd &m);

}  // namespace detail

/// Parses the JSON state document {"d", "q", "terms": [{"re","im","ket"}...]}.
/// Throws FormatError naming the offending field.
PureState parse_state(const std::string &text);

/// Serializes with terms sorted lexicographically by ket.
std::string serialize_state(const PureState &state, int indent = 2);

}  // namespace qudit

#endif  // QUDIT_STATE_HPP
