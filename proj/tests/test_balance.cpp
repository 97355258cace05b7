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

#include <random>

#include "oracles.hpp"
#include "qudit/balance.hpp"
#include "qudit/catalog.hpp"
#include "qudit/errors.hpp"

namespace {

using namespace qudit;

PureState from_kets(int d, const std::vector<Ket> &kets) {
    std::vector<Term> terms;
    for (const auto &k : kets) {
        terms.push_back({{1.0, 0.0}, k});
    }
    return normalize(PureState(QuditSystem(static_cast<int>(kets.front().size()), d), terms));
}

std::vector<long long> weights_of(const BalanceCertificate &c) { return {c.weights().begin(), c.weights().end()}; }

BMatrix random_b(int q, int d, int length, std::mt19937_64 &rng) {
    const QuditSystem system(q, d);
    std::vector<std::uint64_t> pool(system.dense_dimension());
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    length = std::min(length, static_cast<int>(pool.size()));
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(q));
    for (int k = 0; k < length; ++k) {
        const Ket ket = system.ket_of(pool[static_cast<std::size_t>(k)]);
        for (int l = 0; l < q; ++l) {
            rows[static_cast<std::size_t>(l)].push_back(ket[static_cast<std::size_t>(l)]);
        }
    }
    return BMatrix(d, rows);
}

TEST(BMatrix, FromState) {
    const auto b = b_matrix(from_kets(3, {{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_EQ(b.rows(), (std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 2}}));
    EXPECT_EQ(b.length(), 3);
    EXPECT_THROW(BMatrix(2, {{0, 0}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(BMatrix(2, {{0, 2}}), std::invalid_argument);
}

TEST(Alternating, TwoQutritExample) {
    const BMatrix b(3, {{0, 1, 2}, {0, 1, 2}});
    Eigen::MatrixXi a01(2, 3);
    a01 << -1, 1, 0, -1, 1, 0;
    Eigen::MatrixXi a12(2, 3);
    a12 << 0, -1, 1, 0, -1, 1;
    EXPECT_EQ(alternating_matrix(b, 0).entries, a01);
    EXPECT_EQ(alternating_matrix(b, 1).entries, a12);
    EXPECT_THROW(alternating_matrix(b, 2), std::out_of_range);
}

TEST(Alternating, AdditionRule) {
    std::mt19937_64 rng(5);
    const BMatrix b = random_b(3, 5, 9, rng);
    auto acc = alternating_matrix(b, 0);
    for (int j = 1; j + 1 < 5; ++j) {
        acc = compose_alternating(acc, alternating_matrix(b, j));
        EXPECT_EQ(acc.lower, 0);
        EXPECT_EQ(acc.upper, j + 1);
        for (int l = 0; l < 3; ++l) {
            for (int k = 0; k < 9; ++k) {
                const int expected = b(l, k) == 0 ? -1 : (b(l, k) == j + 1 ? 1 : 0);
                EXPECT_EQ(acc.entries(l, k), expected);
            }
        }
    }
    EXPECT_THROW(compose_alternating(alternating_matrix(b, 0), alternating_matrix(b, 2)), std::invalid_argument);
}

TEST(Certificate, Examples) {
    const BMatrix ghz(2, {{0, 1}, {0, 1}, {0, 1}});
    EXPECT_EQ(weights_of(*find_certificate(ghz)), (std::vector<long long>{1, 1}));
    const BMatrix two_qutrit(3, {{0, 1, 2}, {0, 1, 2}});
    EXPECT_EQ(weights_of(*find_certificate(two_qutrit)), (std::vector<long long>{1, 1, 1}));
    const BMatrix w(2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    EXPECT_FALSE(find_certificate(w));
    // 000, 001, 010, 100, 111: the W-like columns force weight 2 on |111>.
    const BMatrix weighted(2, {{0, 0, 0, 1, 1}, {0, 0, 1, 0, 1}, {0, 1, 0, 0, 1}});
    const auto cert = find_certificate(weighted);
    ASSERT_TRUE(cert);
    EXPECT_EQ(weights_of(*cert), (std::vector<long long>{1, 1, 1, 1, 2}));
}

TEST(Certificate, Rejections) {
    EXPECT_THROW(BalanceCertificate({2, 4}), std::invalid_argument);
    EXPECT_THROW(BalanceCertificate({1, 0}), std::invalid_argument);
    EXPECT_THROW(BalanceCertificate({}), std::invalid_argument);
    EXPECT_EQ(BalanceCertificate({2, 3}).total(), 5);
}

TEST(Certificate, AgreesWithBoxSearchOnRandomMatrices) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int q = 1 + trial % 4;
        const int d = 2 + trial % 3;
        int kets = 1;
        for (int l = 0; l < q; ++l) {
            kets *= d;
        }
        const int length = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(kets, 8)));
        const BMatrix b = random_b(q, d, length, rng);
        const auto cert = find_certificate(b);
        const auto expected = oracle::box_certificate(b, 8);
        if (expected) {
            ASSERT_TRUE(cert) << trial;
            EXPECT_EQ(weights_of(*cert), *expected) << trial;
        } else if (cert) {
            // Only possible when the minimal certificate leaves the box.
            EXPECT_GT(*std::max_element(cert->weights().begin(), cert->weights().end()), 8);
        }
        if (cert) {
            EXPECT_TRUE(satisfies_balance(b, cert->weights()));
        }
    }
}

TEST(Certificate, CertificateIsPrimitiveAndPositive) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const BMatrix b = random_b(3, 3, 4 + trial % 8, rng);
        if (const auto cert = find_certificate(b)) {
            long long g = 0;
            for (auto w : cert->weights()) {
                EXPECT_GT(w, 0);
                g = std::gcd(g, w);
            }
            EXPECT_EQ(g, 1);
        }
    }
}

TEST(Irreducible, RankCriterionMatchesOracles) {
    std::mt19937_64 rng(29);
    int balanced_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int q = 2 + trial % 3;
        const int d = 2 + trial % 2;
        const int length = d + static_cast<int>(rng() % 6);
        if (length > 8) {
            continue;
        }
        const BMatrix b = random_b(q, d, length, rng);
        const auto cert = find_certificate(b);
        if (!cert) {
            continue;
        }
        ++balanced_seen;
        const bool fast = is_irreducible(b, *cert);
        EXPECT_EQ(fast, is_irreducible_exhaustive(b)) << trial;
        EXPECT_EQ(fast, oracle::box_irreducible(b, 6)) << trial;
    }
    EXPECT_GT(balanced_seen, 20);
}

TEST(Irreducible, ExhaustiveCap) {
    std::mt19937_64 rng(31);
    const BMatrix b = random_b(4, 3, 30, rng);
    EXPECT_THROW(is_irreducible_exhaustive(b, 24), CapExceeded);
}

TEST(Irreducible, LengthAboveBoundIsNeverIrreducible) {
    for (const auto &entry : catalog(3, 2, 5)) {
        EXPECT_FALSE(entry.irreducible);
    }
}

TEST(BalancedPart, MatchesSubsetOracle) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 150; ++trial) {
        const int q = 2 + trial % 2;
        const int d = 2 + trial % 2;
        const int length = 2 + static_cast<int>(rng() % 6);
        const BMatrix b = random_b(q, d, length, rng);
        EXPECT_EQ(balanced_part(b, Execution::Serial), oracle::box_balanced_part(b, 6)) << trial;
    }
}

TEST(BalancedPart, Examples) {
    const BMatrix w(2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    EXPECT_TRUE(balanced_part(w).empty());
    // GHZ columns plus a stray |001>.
    const BMatrix partly(2, {{0, 1, 0}, {0, 1, 0}, {0, 1, 1}});
    EXPECT_EQ(balanced_part(partly), (std::vector<int>{0, 1}));
}

TEST(Decompose, BlocksAreMinimalAndDisjoint) {
    std::mt19937_64 rng(41);
    int reducible = 0;
    for (int trial = 0; trial < 300 && reducible < 40; ++trial) {
        const BMatrix b = random_b(2 + trial % 2, 2, 4 + static_cast<int>(rng() % 4), rng);
        const auto cert = find_certificate(b);
        if (!cert || is_irreducible(b, *cert)) {
            continue;
        }
        ++reducible;
        const auto dec = decompose_balanced(b);
        std::set<int> seen;
        for (const auto &block : dec.blocks) {
            for (int k : block) {
                EXPECT_TRUE(seen.insert(k).second);
            }
            const BMatrix sub = b.select_columns(block);
            EXPECT_TRUE(oracle::box_irreducible(sub, 6));
        }
        for (int k : dec.remainder) {
            EXPECT_TRUE(seen.insert(k).second);
        }
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(b.length()));
        EXPECT_FALSE(dec.blocks.empty());
    }
    EXPECT_GT(reducible, 10);
}

TEST(Decompose, TwoDisjointGhzBlocks) {
    // 000, 111 and 001, 110 are each balanced.
    const BMatrix b(2, {{0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});
    const auto dec = decompose_balanced(b);
    ASSERT_EQ(dec.blocks.size(), 2u);
    EXPECT_EQ(dec.blocks[0], (std::vector<int>{0, 1}));
    EXPECT_EQ(dec.blocks[1], (std::vector<int>{2, 3}));
    EXPECT_TRUE(dec.remainder.empty());
}

TEST(RootsOfUnity, MatchesCounts) {
    std::mt19937_64 rng(43);
    for (int d : {2, 3, 5}) {
        for (int trial = 0; trial < 100; ++trial) {
            const BMatrix b = random_b(2, d, 2 + trial % 6, rng);
            std::vector<long long> n(static_cast<std::size_t>(b.length()));
            for (auto &x : n) {
                x = 1 + static_cast<long long>(rng() % 4);
            }
            EXPECT_EQ(verify_roots_of_unity(b, n), oracle::balanced(b, n));
        }
    }
    EXPECT_THROW(verify_roots_of_unity(BMatrix(4, {{0, 1, 2, 3}}), std::vector<long long>{1, 1, 1, 1}),
                 std::domain_error);
}

TEST(MaxEntangled, TwoQutrit) {
    const BMatrix b(3, {{0, 1, 2}, {0, 1, 2}});
    const auto state = construct_max_entangled(b, BalanceCertificate({1, 1, 1}));
    ASSERT_EQ(state.length(), 3u);
    for (const auto &term : state.terms()) {
        EXPECT_NEAR(term.amplitude.real(), 1.0 / std::sqrt(3.0), 1e-15);
    }
    EXPECT_TRUE(is_stochastic(state, 1e-12));
    EXPECT_THROW(construct_max_entangled(b, BalanceCertificate({1, 2, 1})), std::invalid_argument);
}

TEST(MaxEntangled, WeightedCertificateGivesFlatDiagonals) {
    // Off-diagonal terms survive when two columns differ on a single site, so
    // only the diagonals of the reductions are fixed by the certificate.
    std::mt19937_64 rng(47);
    int balanced = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 2;
        const BMatrix b = random_b(3, d, 6, rng);
        if (const auto cert = find_certificate(b)) {
            ++balanced;
            const auto state = construct_max_entangled(b, *cert);
            for (int site = 0; site < 3; ++site) {
                const auto rho = reduced_density_matrix(state, site);
                for (int s = 0; s < d; ++s) {
                    EXPECT_NEAR(rho.entries(s, s).real(), 1.0 / d, 1e-12);
                }
            }
        }
    }
    EXPECT_GT(balanced, 10);
}

TEST(Classify, Verdicts) {
    EXPECT_STREQ(verdict_name(classify(from_kets(2, {{0, 0, 0}, {1, 1, 1}}))), "irreducibly_balanced");
    EXPECT_STREQ(verdict_name(classify(from_kets(2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}))), "unbalanced");
    EXPECT_STREQ(verdict_name(classify(from_kets(2, {{0, 0, 0}, {1, 1, 1}, {0, 0, 1}}))), "partly_balanced");
    // Two GHZ-type blocks with amplitudes that rule out every product cut.
    const auto reducible = normalize(PureState(QuditSystem(3, 2), {{{1.0, 0.0}, {0, 0, 0}},
                                                                   {{1.0, 0.0}, {1, 1, 1}},
                                                                   {{2.0, 0.0}, {0, 1, 1}},
                                                                   {{3.0, 0.0}, {1, 0, 0}}}));
    EXPECT_STREQ(verdict_name(classify(reducible)), "balanced_reducible");
    EXPECT_STREQ(verdict_name(classify(from_kets(2, {{0, 0, 0}, {0, 1, 1}}))), "product");
    EXPECT_STREQ(verdict_name(classify(from_kets(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}))), "product");
}

TEST(Classify, PartlyBalancedReportsSupport) {
    const auto c = classify(from_kets(2, {{0, 0, 0}, {0, 0, 1}, {1, 1, 1}}));
    const auto *partly = std::get_if<PartlyBalanced>(&c);
    ASSERT_NE(partly, nullptr);
    EXPECT_EQ(partly->balanced_support, (std::vector<int>{0, 2}));
    EXPECT_TRUE(partly->irreducible);
}

TEST(Classify, ProductSupportsAreNeverIrreducible) {
    // Full tensor grids over local supports: never irreducibly balanced.
    for (int q = 2; q <= 3; ++q) {
        for (int d = 2; d <= 3; ++d) {
            for (int s = 1; s <= d; ++s) {
                std::vector<std::vector<int>> rows(static_cast<std::size_t>(q));
                int count = 1;
                for (int l = 0; l < q; ++l) {
                    count *= s;
                }
                for (int x = 0; x < count; ++x) {
                    int rest = x;
                    for (int l = q - 1; l >= 0; --l) {
                        rows[static_cast<std::size_t>(l)].push_back(rest % s);
                        rest /= s;
                    }
                }
                const BMatrix b(d, rows);
                if (const auto cert = find_certificate(b)) {
                    EXPECT_FALSE(is_irreducible(b, *cert)) << q << d << s;
                }
            }
        }
    }
}

}  // namespace
