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

// Independent reference implementations used only by the tests. Nothing here
// calls into the exact-arithmetic or linear-programming code of the library.

#ifndef QUDIT_TESTS_ORACLES_HPP
#define QUDIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "qudit/balance.hpp"
#include "qudit/state.hpp"

namespace oracle {

using qudit::BMatrix;
using qudit::Complex;
using Rows = std::vector<std::vector<int>>;

// Per site and symbol s >= 1, the count of s minus the count of 0. Zero for all
// entries exactly when every symbol has the same weighted count.
inline std::vector<long long> imbalance(const BMatrix &b, const std::vector<long long> &n) {
    std::vector<long long> out;
    for (int l = 0; l < b.q(); ++l) {
        std::vector<long long> count(static_cast<std::size_t>(b.d()), 0);
        for (int k = 0; k < b.length(); ++k) {
            count[static_cast<std::size_t>(b(l, k))] += n[static_cast<std::size_t>(k)];
        }
        for (int s = 1; s < b.d(); ++s) {
            out.push_back(count[static_cast<std::size_t>(s)] - count[0]);
        }
    }
    return out;
}

inline bool balanced(const BMatrix &b, const std::vector<long long> &n) {
    const auto v = imbalance(b, n);
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// Smallest-sum, then lexicographically smallest n in {1..box}^L with equal
// weighted symbol counts on every site. Meet in the middle over the two column
// halves.
inline std::optional<std::vector<long long>> box_certificate(const BMatrix &b, int box = 12) {
    const int length = b.length();
    const int left = length / 2;
    const int right = length - left;
    auto enumerate = [&](int count, auto &&visit) {
        std::vector<long long> n(static_cast<std::size_t>(count), 1);
        while (true) {
            visit(n);
            int k = count - 1;
            while (k >= 0 && n[static_cast<std::size_t>(k)] == box) {
                n[static_cast<std::size_t>(k)] = 1;
                --k;
            }
            if (k < 0) {
                return;
            }
            ++n[static_cast<std::size_t>(k)];
        }
    };
    auto partial = [&](int offset, const std::vector<long long> &n) {
        std::vector<long long> full(static_cast<std::size_t>(length), 0);
        std::copy(n.begin(), n.end(), full.begin() + offset);
        return imbalance(b, full);
    };
    struct Best {
        long long sum;
        std::vector<long long> n;
    };
    std::map<std::vector<long long>, Best> left_best;
    enumerate(left, [&](const std::vector<long long> &n) {
        const long long sum = std::accumulate(n.begin(), n.end(), 0LL);
        auto key = partial(0, n);
        auto it = left_best.find(key);
        if (it == left_best.end()) {
            left_best.emplace(std::move(key), Best{sum, n});
        } else if (sum < it->second.sum || (sum == it->second.sum && n < it->second.n)) {
            it->second = Best{sum, n};
        }
    });
    std::optional<std::vector<long long>> best;
    long long best_sum = 0;
    enumerate(right, [&](const std::vector<long long> &n) {
        auto key = partial(left, n);
        for (auto &v : key) {
            v = -v;
        }
        const auto it = left_best.find(key);
        if (it == left_best.end()) {
            return;
        }
        std::vector<long long> full = it->second.n;
        full.insert(full.end(), n.begin(), n.end());
        const long long sum = it->second.sum + std::accumulate(n.begin(), n.end(), 0LL);
        if (!best || sum < best_sum || (sum == best_sum && full < *best)) {
            best = full;
            best_sum = sum;
        }
    });
    return best;
}

// Irreducible: balanced in the box and no proper nonempty column subset is.
inline bool box_irreducible(const BMatrix &b, int box = 12) {
    if (!box_certificate(b, box)) {
        return false;
    }
    const int length = b.length();
    for (unsigned mask = 1; mask + 1 < (1u << length); ++mask) {
        std::vector<int> columns;
        for (int k = 0; k < length; ++k) {
            if (mask & (1u << k)) {
                columns.push_back(k);
            }
        }
        if (box_certificate(b.select_columns(columns), box)) {
            return false;
        }
    }
    return true;
}

// Union of the supports of all balanced column subsets.
inline std::vector<int> box_balanced_part(const BMatrix &b, int box = 12) {
    const int length = b.length();
    std::set<int> support;
    for (unsigned mask = 1; mask < (1u << length); ++mask) {
        std::vector<int> columns;
        for (int k = 0; k < length; ++k) {
            if (mask & (1u << k)) {
                columns.push_back(k);
            }
        }
        if (box_certificate(b.select_columns(columns), box)) {
            support.insert(columns.begin(), columns.end());
        }
    }
    return {support.begin(), support.end()};
}

// Row-major flattening after sorting the columns.
inline std::vector<int> sorted_key(int q, std::vector<std::vector<int>> columns) {
    std::sort(columns.begin(), columns.end());
    std::vector<int> key;
    for (int l = 0; l < q; ++l) {
        for (const auto &c : columns) {
            key.push_back(c[static_cast<std::size_t>(l)]);
        }
    }
    return key;
}

// Lexicographic minimum over every site permutation and per-site relabelling.
inline Rows brute_canonical(const BMatrix &b) {
    const int q = b.q();
    const int d = b.d();
    std::vector<std::vector<int>> label_perms;
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    do {
        label_perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> sites(static_cast<std::size_t>(q));
    std::iota(sites.begin(), sites.end(), 0);
    std::optional<std::vector<int>> best;
    do {
        std::vector<std::size_t> choice(static_cast<std::size_t>(q), 0);
        while (true) {
            std::vector<std::vector<int>> columns(static_cast<std::size_t>(b.length()));
            for (int k = 0; k < b.length(); ++k) {
                for (int l = 0; l < q; ++l) {
                    const int src = sites[static_cast<std::size_t>(l)];
                    columns[static_cast<std::size_t>(k)].push_back(
                        label_perms[choice[static_cast<std::size_t>(l)]][static_cast<std::size_t>(b(src, k))]);
                }
            }
            auto key = sorted_key(q, columns);
            if (!best || key < *best) {
                best = key;
            }
            int l = q - 1;
            while (l >= 0 && choice[static_cast<std::size_t>(l)] + 1 == label_perms.size()) {
                choice[static_cast<std::size_t>(l)] = 0;
                --l;
            }
            if (l < 0) {
                break;
            }
            ++choice[static_cast<std::size_t>(l)];
        }
    } while (std::next_permutation(sites.begin(), sites.end()));
    Rows rows(static_cast<std::size_t>(q));
    for (int l = 0; l < q; ++l) {
        rows[static_cast<std::size_t>(l)].assign(best->begin() + l * b.length(), best->begin() + (l + 1) * b.length());
    }
    return rows;
}

// Number of equivalence classes of L distinct kets, counted over all subsets.
inline std::size_t brute_class_count(int q, int d, int length) {
    int kets = 1;
    for (int l = 0; l < q; ++l) {
        kets *= d;
    }
    std::set<Rows> classes;
    std::vector<bool> pick(static_cast<std::size_t>(kets), false);
    std::fill(pick.begin(), pick.begin() + length, true);
    do {
        Rows rows(static_cast<std::size_t>(q));
        for (int x = 0; x < kets; ++x) {
            if (!pick[static_cast<std::size_t>(x)]) {
                continue;
            }
            int rest = x;
            for (int l = q - 1; l >= 0; --l) {
                rows[static_cast<std::size_t>(l)].push_back(rest % d);
                rest /= d;
            }
        }
        classes.insert(brute_canonical(BMatrix(d, rows)));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return classes.size();
}

// Dense amplitude tensor helpers: index with site 0 most significant.
inline Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd &psi, int q, int d, int site) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    long long stride = 1;
    for (int l = q - 1; l > site; --l) {
        stride *= d;
    }
    for (Eigen::Index a = 0; a < psi.size(); ++a) {
        const int sa = static_cast<int>((a / stride) % d);
        for (int sb = 0; sb < d; ++sb) {
            const Eigen::Index b = a + (sb - sa) * stride;
            rho(sa, sb) += psi[a] * std::conj(psi[b]);
        }
    }
    return rho;
}

inline Eigen::VectorXcd apply_local(const Eigen::VectorXcd &psi, int q, int d, int site, const Eigen::MatrixXcd &m) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    long long stride = 1;
    for (int l = q - 1; l > site; --l) {
        stride *= d;
    }
    for (Eigen::Index a = 0; a < psi.size(); ++a) {
        const int sa = static_cast<int>((a / stride) % d);
        for (int sb = 0; sb < d; ++sb) {
            out[a + (sb - sa) * stride] += m(sb, sa) * psi[a];
        }
    }
    return out;
}

// Leibniz expansion of a small determinant.
inline Complex leibniz_det(const Eigen::MatrixXcd &m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    Complex total{0.0, 0.0};
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
            }
        }
        Complex term = inversions % 2 ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
        for (int i = 0; i < n; ++i) {
            term *= m(i, p[static_cast<std::size_t>(i)]);
        }
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Wootters concurrence of a two-qubit density matrix.
inline double wootters(const Eigen::Matrix4cd &rho) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd tilde = yy * rho.conjugate() * yy;
    const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> eig(rho * tilde);
    std::vector<double> lambda;
    for (int k = 0; k < 4; ++k) {
        lambda.push_back(std::sqrt(std::max(0.0, eig.eigenvalues()[k].real())));
    }
    std::sort(lambda.rbegin(), lambda.rend());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

// Three-tangle of a normalized three-qubit state through the monogamy identity
// tau = C^2_{1|23} - C^2_{12} - C^2_{13}.
inline double ckw_tangle(const Eigen::VectorXcd &psi) {
    const Eigen::MatrixXcd rho1 = partial_trace(psi, 3, 2, 0);
    const double c1_23 = 4.0 * std::abs(rho1.determinant());
    auto pair = [&](int traced) {
        Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b) {
                const int ta = (a >> (2 - traced)) & 1;
                const int tb = (b >> (2 - traced)) & 1;
                if (ta != tb) {
                    continue;
                }
                auto keep = [&](int x) {
                    int bits[3] = {(x >> 2) & 1, (x >> 1) & 1, x & 1};
                    int out = 0;
                    for (int l = 0; l < 3; ++l) {
                        if (l != traced) {
                            out = out * 2 + bits[l];
                        }
                    }
                    return out;
                };
                rho(keep(a), keep(b)) += psi[a] * std::conj(psi[b]);
            }
        }
        return wootters(rho);
    };
    const double c12 = pair(2);
    const double c13 = pair(1);
    return c1_23 - c12 * c12 - c13 * c13;
}

inline Eigen::MatrixXcd random_sl(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            m(r, c) = Complex{g(rng), g(rng)} / std::sqrt(static_cast<double>(d));
        }
    }
    m += Eigen::MatrixXcd::Identity(d, d);
    return m / std::pow(m.determinant(), 1.0 / d);
}

}  // namespace oracle

#endif  // QUDIT_TESTS_ORACLES_HPP
