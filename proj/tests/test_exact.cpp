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

#include <gtest/gtest.h>

#include "qudit/exact.hpp"

namespace {

using namespace qudit::exact;

RationalMatrix from_rows(const std::vector<std::vector<long>> &rows) {
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

TEST(RowReduce, RankAndKernel) {
    const auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    EXPECT_EQ(rank(m), 2u);
    const auto basis = kernel_basis(m);
    ASSERT_EQ(basis.size(), 1u);
    const auto image = m.multiply(basis[0]);
    for (const auto &v : image) {
        EXPECT_EQ(v, 0);
    }
    const auto ech = row_reduce(m);
    EXPECT_EQ(ech.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(ech.free, (std::vector<std::size_t>{2}));
}

TEST(RowReduce, ExactWithRationals) {
    RationalMatrix m(2, 2);
    m(0, 0) = Rational(1, 3);
    m(0, 1) = Rational(1, 7);
    m(1, 0) = Rational(7, 3);
    m(1, 1) = 1;
    EXPECT_EQ(rank(m), 1u);
}

TEST(Maximize, SmallProgram) {
    // max x + y with x + 2y + s1 = 4, 3x + y + s2 = 6: optimum (8/5, 6/5), value 14/5.
    const auto a = from_rows({{1, 2, 1, 0}, {3, 1, 0, 1}});
    const auto result = maximize(a, {4, 6}, {1, 1, 0, 0});
    ASSERT_EQ(result.status, LpStatus::Optimal);
    EXPECT_EQ(result.objective, Rational(14, 5));
    EXPECT_EQ(result.x[0], Rational(8, 5));
    EXPECT_EQ(result.x[1], Rational(6, 5));
}

TEST(Maximize, InfeasibleAndUnbounded) {
    EXPECT_EQ(maximize(from_rows({{1, 1}}), {-1}, {1, 0}).status, LpStatus::Infeasible);
    EXPECT_FALSE(feasible(from_rows({{1, -1}, {1, 1}}), {1, -1}));
    EXPECT_EQ(maximize(from_rows({{1, -1}}), {0}, {1, 0}).status, LpStatus::Unbounded);
    EXPECT_TRUE(feasible(from_rows({{1, -1}}), {0}));
}

TEST(Maximize, RedundantRows) {
    const auto a = from_rows({{1, 1, 1}, {2, 2, 2}, {1, 0, 0}});
    const auto result = maximize(a, {3, 6, 1}, {0, 1, 0});
    ASSERT_EQ(result.status, LpStatus::Optimal);
    EXPECT_EQ(result.objective, 2);
}

TEST(Maximize, DegenerateCycleProneProgram) {
    // Beale's cycling example in equality form; Bland's rule must terminate.
    // Optimum cross-checked with an independent floating-point solver.
    RationalMatrix a(3, 7);
    const Rational rows[3][7] = {{Rational(1, 4), -8, -1, 9, 1, 0, 0},
                                 {Rational(1, 2), -12, Rational(-1, 2), 3, 0, 1, 0},
                                 {0, 0, 1, 0, 0, 0, 1}};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 7; ++c) {
            a(r, c) = rows[r][c];
        }
    }
    const auto result = maximize(a, {0, 0, 1}, {Rational(3, 4), -150, Rational(1, 50), -6, 0, 0, 0});
    ASSERT_EQ(result.status, LpStatus::Optimal);
    EXPECT_EQ(result.objective, Rational(77, 100));
}

TEST(PrimitiveIntegerVector, ClearsDenominators) {
    EXPECT_EQ(primitive_integer_vector({Rational(1, 2), Rational(1, 3), 0}), (std::vector<long long>{3, 2, 0}));
    EXPECT_EQ(primitive_integer_vector({4, 6}), (std::vector<long long>{2, 3}));
}

}  // namespace
