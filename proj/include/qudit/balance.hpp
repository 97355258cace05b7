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

#ifndef QUDIT_BALANCE_HPP
#define QUDIT_BALANCE_HPP

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qudit/exact.hpp"
#include "qudit/parallel.hpp"
#include "qudit/state.hpp"

namespace qudit {

/// q x L matrix of local basis labels; column k is the ket of term k.
/// Columns are pairwise distinct and every entry lies in 0..d-1.
class BMatrix {
   public:
    /// rows[l][k] is the label of site l in column k.
    BMatrix(int d, const std::vector<std::vector<int>> &rows);

    int q() const noexcept { return q_; }
    int length() const noexcept { return length_; }
    int d() const noexcept { return d_; }

    int operator()(int site, int column) const { return entries_[static_cast<std::size_t>(site * length_ + column)]; }

    Ket column(int k) const;
    std::vector<std::vector<int>> rows() const;
    BMatrix select_columns(std::span<const int> columns) const;

    friend bool operator==(const BMatrix &, const BMatrix &) = default;

   private:
    BMatrix(int q, int length, int d, std::vector<int> entries);

    int q_;
    int length_;
    int d_;
    std::vector<int> entries_;
};

/// Signed occurrence matrix for the symbol range (lower, upper): -1 where
/// B = lower, +1 where B = upper, 0 elsewhere. lower == upper is the empty
/// range and is identically zero.
struct AlternatingMatrix {
    int lower;
    int upper;
    Eigen::MatrixXi entries;
};

/// Positive integer weights n_k with gcd 1 that equalize every symbol's
/// weighted count on every site.
class BalanceCertificate {
   public:
    explicit BalanceCertificate(std::vector<long long> weights);

    std::span<const long long> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    long long operator[](std::size_t k) const { return weights_[k]; }
    long long total() const;

    friend bool operator==(const BalanceCertificate &, const BalanceCertificate &) = default;

   private:
    std::vector<long long> weights_;
};

BMatrix b_matrix(const PureState &state);

AlternatingMatrix alternating_matrix(const BMatrix &b, int j);

/// A1 covers (j, j+s), A2 covers (j+s, j+s+1); the sum covers (j, j+s+1).
AlternatingMatrix compose_alternating(const AlternatingMatrix &a1, const AlternatingMatrix &a2);

/// Stacked q(d-1) x L system whose rational kernel holds all balancing weights.
exact::RationalMatrix balance_constraints(const BMatrix &b);

/// Exact equal-count check of arbitrary nonnegative weights (size must be L).
bool satisfies_balance(const BMatrix &b, std::span<const long long> weights);

/// Smallest-total positive integer certificate (lexicographic tie-break), or
/// nullopt when no strictly positive kernel vector exists.
std::optional<BalanceCertificate> find_certificate(const BMatrix &b);

/// Roots-of-unity form of the balance condition; d must be prime.
bool verify_roots_of_unity(const BMatrix &b, std::span<const long long> weights);

/// No nonempty proper column subset admits its own certificate.
/// cert must certify b.
bool is_irreducible(const BMatrix &b, const BalanceCertificate &cert);

/// Reference implementation: checks every nonempty proper column subset.
/// Throws CapExceeded for L > cap.
bool is_irreducible_exhaustive(const BMatrix &b, int cap = 24);

/// Maximal balanced support (sorted column indices).
std::vector<int> balanced_part(const BMatrix &b, Execution exec = Execution::Parallel);

struct Decomposition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> remainder;
};

/// Greedy extraction of smallest balanced column subsets (lexicographic
/// tie-break). Throws CapExceeded for L > cap.
Decomposition decompose_balanced(const BMatrix &b, int cap = 24);

/// Normalized sum_k sqrt(n_k) |B_k>.
PureState construct_max_entangled(const BMatrix &b, const BalanceCertificate &cert);

struct Product {};
struct Unbalanced {};
struct PartlyBalanced {
    std::vector<int> balanced_support;
    bool irreducible;
};
struct BalancedReducible {
    BalanceCertificate certificate;
    Decomposition decomposition;
};
struct IrreduciblyBalanced {
    BalanceCertificate certificate;
};

using Classification = std::variant<Product, Unbalanced, PartlyBalanced, BalancedReducible, IrreduciblyBalanced>;

struct ClassifyOptions {
    double tol = kDefaultTolerance;
    int cap = 24;
    Execution exec = Execution::Parallel;
};

/// Classifies the given product-basis representation.
Classification classify(const PureState &state, const ClassifyOptions &options = {});

const char *verdict_name(const Classification &c);

}  // namespace qudit

#endif  // QUDIT_BALANCE_HPP
