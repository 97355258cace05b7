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

#ifndef QUDIT_EXACT_HPP
#define QUDIT_EXACT_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace qudit::exact {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of GMP rationals.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector multiply(const RationalVector &x) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    RationalMatrix reduced;            // reduced row echelon form, zero rows removed
    std::vector<std::size_t> pivots;   // pivot column of each remaining row
    std::vector<std::size_t> free;     // non-pivot columns, ascending
};

RowEchelon row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix &m);

/// One basis vector per free column: that column set to 1, other free columns 0.
std::vector<RationalVector> kernel_basis(const RationalMatrix &m);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RationalVector x;
    Rational objective;
};

/// maximize c.x subject to A x = b, x >= 0. Two-phase primal simplex with
/// Bland's rule, so it terminates on degenerate problems.
LpResult maximize(const RationalMatrix &a, const RationalVector &b, const RationalVector &c);

/// Feasibility of A x = b, x >= 0 (phase one only).
bool feasible(const RationalMatrix &a, const RationalVector &b);

/// Smallest positive integer multiple of a nonnegative rational vector with gcd 1.
std::vector<long long> primitive_integer_vector(const RationalVector &x);

}  // namespace qudit::exact

#endif  // QUDIT_EXACT_HPP
