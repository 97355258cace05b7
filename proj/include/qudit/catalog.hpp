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

#ifndef QUDIT_CATALOG_HPP
#define QUDIT_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qudit/balance.hpp"
#include "qudit/parallel.hpp"

namespace qudit {

/// Lexicographically smallest matrix (row-major, columns sorted) in the orbit
/// of b under site permutations and independent per-site symbol relabelings.
BMatrix canonical_form(const BMatrix &b);

/// A B-matrix already in canonical form.
class CanonicalBMatrix {
   public:
    explicit CanonicalBMatrix(const BMatrix &b) : b_(canonical_form(b)) {}

    const BMatrix &matrix() const noexcept { return b_; }
    int q() const noexcept { return b_.q(); }
    int d() const noexcept { return b_.d(); }
    int length() const noexcept { return b_.length(); }

    friend bool operator==(const CanonicalBMatrix &, const CanonicalBMatrix &) = default;

   private:
    BMatrix b_;
};

/// Desk-scale limits; exceeding any of them raises CapExceeded.
struct EnumerationCaps {
    int max_q = 6;
    int max_d = 5;
    int max_length = 25;
    int max_cells = 30;                        // q * L
    std::uint64_t max_subsets = 500'000'000;  // candidate column sets examined
    int slack = 2;                             // lengths allowed beyond (d-1)q+1
};

/// One representative per canonical class of q x L matrices over 0..d-1 with
/// distinct columns, in ascending row-major order.
std::vector<CanonicalBMatrix> enumerate_b_matrices(int q, int d, int length, const EnumerationCaps &caps = {},
                                                   Execution exec = Execution::Parallel);

struct CatalogEntry {
    CanonicalBMatrix b;
    std::optional<BalanceCertificate> certificate;
    bool irreducible = false;
};

/// Certificate and irreducibility of one class.
CatalogEntry analyze(const CanonicalBMatrix &b);

/// Every class of the given length with its analysis.
std::vector<CatalogEntry> catalog(int q, int d, int length, const EnumerationCaps &caps = {},
                                  Execution exec = Execution::Parallel);

/// All canonical irreducibly balanced configurations with L <= max_length.
std::vector<CatalogEntry> enumerate_irreducible(int q, int d, int max_length, const EnumerationCaps &caps = {},
                                                Execution exec = Execution::Parallel);

struct LengthCount {
    int length;
    std::size_t classes;
    std::size_t balanced;
    std::size_t irreducible;
};

struct LengthBoundReport {
    int q;
    int d;
    int bound;  // (d-1)q + 1
    std::vector<LengthCount> lengths;
    std::vector<BMatrix> counterexamples;

    bool passed() const noexcept { return counterexamples.empty(); }
};

/// Checks that every balanced class with bound < L <= bound + 2 is reducible.
LengthBoundReport verify_length_bound(int q, int d, const EnumerationCaps &caps = {},
                                      Execution exec = Execution::Parallel);

}  // namespace qudit

#endif  // QUDIT_CATALOG_HPP
