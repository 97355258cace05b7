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

#include "qudit/balance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qudit/errors.hpp"

namespace qudit {

using exact::Rational;
using exact::RationalMatrix;
using exact::RationalVector;

BMatrix::BMatrix(int q, int length, int d, std::vector<int> entries)
    : q_(q), length_(length), d_(d), entries_(std::move(entries)) {}

BMatrix::BMatrix(int d, const std::vector<std::vector<int>> &rows) : q_(0), length_(0), d_(d) {
    if (d < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("B-matrix needs at least one row and one column");
    }
    q_ = static_cast<int>(rows.size());
    length_ = static_cast<int>(rows.front().size());
    for (const auto &row : rows) {
        if (static_cast<int>(row.size()) != length_) {
            throw std::invalid_argument("B-matrix rows must have equal length");
        }
        for (int v : row) {
            if (v < 0 || v >= d) {
                throw std::invalid_argument("B-matrix entry " + std::to_string(v) + " outside 0.." +
                                            std::to_string(d - 1));
            }
            entries_.push_back(v);
        }
    }
    std::set<Ket> seen;
    for (int k = 0; k < length_; ++k) {
        if (!seen.insert(column(k)).second) {
            throw std::invalid_argument("B-matrix column " + std::to_string(k + 1) + " repeats an earlier column");
        }
    }
}

Ket BMatrix::column(int k) const {
    Ket col(static_cast<std::size_t>(q_));
    for (int l = 0; l < q_; ++l) {
        col[static_cast<std::size_t>(l)] = (*this)(l, k);
    }
    return col;
}

std::vector<std::vector<int>> BMatrix::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(q_));
    for (int l = 0; l < q_; ++l) {
        out[static_cast<std::size_t>(l)].assign(entries_.begin() + l * length_, entries_.begin() + (l + 1) * length_);
    }
    return out;
}

BMatrix BMatrix::select_columns(std::span<const int> columns) const {
    if (columns.empty()) {
        throw std::invalid_argument("column selection is empty");
    }
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(q_) * columns.size());
    for (int l = 0; l < q_; ++l) {
        for (int k : columns) {
            if (k < 0 || k >= length_) {
                throw std::out_of_range("column index out of range");
            }
            entries.push_back((*this)(l, k));
        }
    }
    return BMatrix(q_, static_cast<int>(columns.size()), d_, std::move(entries));
}

BalanceCertificate::BalanceCertificate(std::vector<long long> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("certificate is empty");
    }
    long long g = 0;
    for (long long w : weights_) {
        if (w <= 0) {
            throw std::invalid_argument("certificate weights must be positive");
        }
        g = std::gcd(g, w);
    }
    if (g != 1) {
        throw std::invalid_argument("certificate weights must be relatively prime");
    }
}

long long BalanceCertificate::total() const { return std::accumulate(weights_.begin(), weights_.end(), 0LL); }

BMatrix b_matrix(const PureState &state) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(state.q()));
    for (const auto &term : state.terms()) {
        for (int l = 0; l < state.q(); ++l) {
            rows[static_cast<std::size_t>(l)].push_back(term.ket[static_cast<std::size_t>(l)]);
        }
    }
    return BMatrix(state.d(), rows);
}

AlternatingMatrix alternating_matrix(const BMatrix &b, int j) {
    if (j < 0 || j > b.d() - 2) {
        throw std::out_of_range("symbol pair index " + std::to_string(j) + " outside 0.." + std::to_string(b.d() - 2));
    }
    AlternatingMatrix a{j, j + 1, Eigen::MatrixXi::Zero(b.q(), b.length())};
    for (int l = 0; l < b.q(); ++l) {
        for (int k = 0; k < b.length(); ++k) {
            if (b(l, k) == j) {
                a.entries(l, k) = -1;
            } else if (b(l, k) == j + 1) {
                a.entries(l, k) = 1;
            }
        }
    }
    return a;
}

AlternatingMatrix compose_alternating(const AlternatingMatrix &a1, const AlternatingMatrix &a2) {
    if (a1.upper != a2.lower) {
        throw std::invalid_argument("symbol ranges (" + std::to_string(a1.lower) + "," + std::to_string(a1.upper) +
                                    ") and (" + std::to_string(a2.lower) + "," + std::to_string(a2.upper) +
                                    ") are not adjacent");
    }
    if (a1.entries.rows() != a2.entries.rows() || a1.entries.cols() != a2.entries.cols()) {
        throw std::invalid_argument("alternating matrices differ in shape");
    }
    return {a1.lower, a2.upper, a1.entries + a2.entries};
}

RationalMatrix balance_constraints(const BMatrix &b) {
    RationalMatrix m(static_cast<std::size_t>(b.q() * (b.d() - 1)), static_cast<std::size_t>(b.length()));
    for (int l = 0; l < b.q(); ++l) {
        for (int j = 0; j + 1 < b.d(); ++j) {
            const auto row = static_cast<std::size_t>(l * (b.d() - 1) + j);
            for (int k = 0; k < b.length(); ++k) {
                if (b(l, k) == j) {
                    m(row, static_cast<std::size_t>(k)) = -1;
                } else if (b(l, k) == j + 1) {
                    m(row, static_cast<std::size_t>(k)) = 1;
                }
            }
        }
    }
    return m;
}

namespace {

// counts[l][s] = sum of weights of columns whose site-l label is s.
std::vector<std::vector<long long>> symbol_counts(const BMatrix &b, std::span<const long long> weights) {
    std::vector<std::vector<long long>> counts(static_cast<std::size_t>(b.q()),
                                               std::vector<long long>(static_cast<std::size_t>(b.d())));
    for (int l = 0; l < b.q(); ++l) {
        for (int k = 0; k < b.length(); ++k) {
            counts[static_cast<std::size_t>(l)][static_cast<std::size_t>(b(l, k))] += weights[static_cast<std::size_t>(k)];
        }
    }
    return counts;
}

void check_weights(const BMatrix &b, std::span<const long long> weights) {
    if (weights.size() != static_cast<std::size_t>(b.length())) {
        throw std::invalid_argument("weight vector length " + std::to_string(weights.size()) +
                                    " does not match L = " + std::to_string(b.length()));
    }
    for (long long w : weights) {
        if (w < 0) {
            throw std::invalid_argument("weights must be nonnegative");
        }
    }
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

// Every site uses every symbol; necessary for any strictly positive solution.
bool covers_all_symbols(const BMatrix &b, std::span<const int> columns) {
    for (int l = 0; l < b.q(); ++l) {
        unsigned seen = 0;
        for (int k : columns) {
            seen |= 1u << b(l, k);
        }
        if (seen != (1u << b.d()) - 1) {
            return false;
        }
    }
    return true;
}

// Exact test that the selected columns carry exactly one kernel direction and
// that it is strictly positive, i.e. they form a minimal balanced support.
bool is_minimal_balanced_support(const BMatrix &b, std::span<const int> columns) {
    if (!covers_all_symbols(b, columns)) {
        return false;
    }
    const auto basis = exact::kernel_basis(balance_constraints(b.select_columns(columns)));
    if (basis.size() != 1) {
        return false;
    }
    const int sign = sgn(basis.front().front());
    return sign != 0 && std::all_of(basis.front().begin(), basis.front().end(),
                                    [sign](const Rational &v) { return sgn(v) == sign; });
}

// Minimum-total integer point n >= 1 of the kernel, lexicographically smallest
// among ties. `upper` is a known certificate and bounds the search.
std::vector<long long> minimal_certificate(const exact::RowEchelon &ech, std::size_t length,
                                           std::vector<long long> upper) {
    const std::size_t free_count = ech.free.size();
    const std::size_t pivot_count = ech.pivots.size();
    // Integer form of each pivot row: den * n_pivot = -sum coeff_f * n_f.
    std::vector<long long> den(pivot_count);
    std::vector<std::vector<long long>> coeff(pivot_count, std::vector<long long>(free_count));
    for (std::size_t i = 0; i < pivot_count; ++i) {
        mpz_class lcm = 1;
        for (std::size_t f = 0; f < free_count; ++f) {
            const Rational &r = ech.reduced(i, ech.free[f]);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
        }
        if (!lcm.fits_slong_p()) {
            throw std::overflow_error("kernel denominators too large");
        }
        den[i] = lcm.get_si();
        for (std::size_t f = 0; f < free_count; ++f) {
            const Rational &r = ech.reduced(i, ech.free[f]);
            mpz_class scaled = r.get_num() * (lcm / r.get_den());
            if (!scaled.fits_slong_p()) {
                throw std::overflow_error("kernel coefficients too large");
            }
            coeff[i][f] = scaled.get_si();
        }
    }

    long long best_total = std::accumulate(upper.begin(), upper.end(), 0LL);
    std::vector<long long> best = std::move(upper);
    std::vector<long long> free_values(free_count, 1);
    std::vector<long long> candidate(length);

    // Depth-first over the free coordinates; each pivot contributes at least 1.
    auto visit = [&](auto &&self, std::size_t depth, long long partial) -> void {
        if (depth == free_count) {
            long long total = partial;
            for (std::size_t i = 0; i < pivot_count; ++i) {
                long long acc = 0;
                for (std::size_t f = 0; f < free_count; ++f) {
                    acc -= coeff[i][f] * free_values[f];
                }
                if (acc <= 0 || acc % den[i] != 0) {
                    return;
                }
                candidate[ech.pivots[i]] = acc / den[i];
                total += acc / den[i];
            }
            for (std::size_t f = 0; f < free_count; ++f) {
                candidate[ech.free[f]] = free_values[f];
            }
            if (total < best_total || (total == best_total && candidate < best)) {
                best_total = total;
                best = candidate;
            }
            return;
        }
        const long long remaining_floor = static_cast<long long>(free_count - depth - 1 + pivot_count);
        for (long long v = 1; partial + v + remaining_floor <= best_total; ++v) {
            free_values[depth] = v;
            self(self, depth + 1, partial + v);
        }
    };
    visit(visit, 0, 0);
    return best;
}

}  // namespace

bool satisfies_balance(const BMatrix &b, std::span<const long long> weights) {
    check_weights(b, weights);
    for (const auto &per_site : symbol_counts(b, weights)) {
        if (std::adjacent_find(per_site.begin(), per_site.end(), std::not_equal_to<>()) != per_site.end()) {
            return false;
        }
    }
    return true;
}

std::optional<BalanceCertificate> find_certificate(const BMatrix &b) {
    const std::size_t length = static_cast<std::size_t>(b.length());
    std::vector<int> all(length);
    std::iota(all.begin(), all.end(), 0);
    if (!covers_all_symbols(b, all)) {
        return std::nullopt;
    }
    const std::vector<long long> ones(length, 1);
    if (satisfies_balance(b, ones)) {
        return BalanceCertificate(ones);
    }
    const exact::RowEchelon ech = exact::row_reduce(balance_constraints(b));
    if (ech.free.empty()) {
        return std::nullopt;
    }
    // maximize s subject to R n = 0, sum n = 1, n_k - s - w_k = 0; variables (n, s, w) >= 0.
    const std::size_t kernel_rows = ech.pivots.size();
    const std::size_t vars = 2 * length + 1;
    RationalMatrix lp(kernel_rows + 1 + length, vars);
    RationalVector rhs(kernel_rows + 1 + length);
    for (std::size_t i = 0; i < kernel_rows; ++i) {
        for (std::size_t k = 0; k < length; ++k) {
            lp(i, k) = ech.reduced(i, k);
        }
    }
    for (std::size_t k = 0; k < length; ++k) {
        lp(kernel_rows, k) = 1;
    }
    rhs[kernel_rows] = 1;
    for (std::size_t k = 0; k < length; ++k) {
        const std::size_t row = kernel_rows + 1 + k;
        lp(row, k) = 1;
        lp(row, length) = -1;
        lp(row, length + 1 + k) = -1;
    }
    RationalVector objective(vars);
    objective[length] = 1;
    const auto result = exact::maximize(lp, rhs, objective);
    if (result.status != exact::LpStatus::Optimal || sgn(result.objective) <= 0) {
        return std::nullopt;
    }
    const RationalVector point(result.x.begin(), result.x.begin() + static_cast<std::ptrdiff_t>(length));
    auto weights = minimal_certificate(ech, length, exact::primitive_integer_vector(point));
    return BalanceCertificate(std::move(weights));
}

bool verify_roots_of_unity(const BMatrix &b, std::span<const long long> weights) {
    if (!is_prime(b.d())) {
        throw std::domain_error("roots-of-unity condition requires a prime local dimension, got d = " +
                                std::to_string(b.d()));
    }
    check_weights(b, weights);
    const bool equal_counts = satisfies_balance(b, weights);
    bool complex_zero = true;
    for (int l = 0; l < b.q(); ++l) {
        Complex sum{0.0, 0.0};
        for (int k = 0; k < b.length(); ++k) {
            const double angle = 2.0 * std::numbers::pi * b(l, k) / b.d();
            sum += static_cast<double>(weights[static_cast<std::size_t>(k)]) * std::polar(1.0, angle);
        }
        if (std::abs(sum) > 1e-10) {
            complex_zero = false;
        }
    }
    if (complex_zero != equal_counts) {
        throw std::logic_error("roots-of-unity evaluation disagrees with the exact symbol counts");
    }
    return equal_counts;
}

bool is_irreducible(const BMatrix &b, const BalanceCertificate &cert) {
    if (!satisfies_balance(b, cert.weights())) {
        throw std::invalid_argument("certificate does not balance the B-matrix");
    }
    // A strictly positive kernel vector plus nullity 1 leaves no room for a
    // proper balanced subset; nullity >= 2 always yields one.
    return exact::rank(balance_constraints(b)) + 1 == static_cast<std::size_t>(b.length());
}

bool is_irreducible_exhaustive(const BMatrix &b, int cap) {
    const int length = b.length();
    if (length > cap || length > 30) {
        throw CapExceeded("exhaustive subset search limited to L <= " + std::to_string(cap) + ", got L = " +
                          std::to_string(length));
    }
    const std::uint32_t full = (std::uint32_t{1} << length) - 1;
    std::vector<int> columns;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        columns.clear();
        for (int k = 0; k < length; ++k) {
            if (mask & (std::uint32_t{1} << k)) {
                columns.push_back(k);
            }
        }
        if (find_certificate(b.select_columns(columns))) {
            return false;
        }
    }
    return true;
}

std::vector<int> balanced_part(const BMatrix &b, Execution exec) {
    const exact::RowEchelon ech = exact::row_reduce(balance_constraints(b));
    const std::size_t length = static_cast<std::size_t>(b.length());
    const std::size_t rows = ech.pivots.size();
    std::vector<char> member(length, 0);
    if (ech.free.empty()) {
        return {};
    }
    // Column k is in the support iff {R n = 0, n_k = 1, n >= 0} is feasible.
    for_each_index(exec, length, [&](std::size_t k) {
        RationalMatrix a(rows + 1, length);
        RationalVector rhs(rows + 1);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t c = 0; c < length; ++c) {
                a(i, c) = ech.reduced(i, c);
            }
        }
        a(rows, k) = 1;
        rhs[rows] = 1;
        member[k] = exact::feasible(a, rhs) ? 1 : 0;
    });
    std::vector<int> support;
    for (std::size_t k = 0; k < length; ++k) {
        if (member[k]) {
            support.push_back(static_cast<int>(k));
        }
    }
    return support;
}

namespace {

// First minimal balanced subset of `candidates` by (size, lexicographic order).
std::optional<std::vector<int>> smallest_balanced_subset(const BMatrix &b, const std::vector<int> &candidates) {
    const int n = static_cast<int>(candidates.size());
    const int max_size = std::min(n, b.q() * (b.d() - 1) + 1);
    std::vector<int> chosen;
    for (int size = b.d(); size <= max_size; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            chosen.clear();
            for (int i : idx) {
                chosen.push_back(candidates[static_cast<std::size_t>(i)]);
            }
            if (is_minimal_balanced_support(b, chosen)) {
                return chosen;
            }
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) {
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i) {
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Decomposition decompose_balanced(const BMatrix &b, int cap) {
    if (b.length() > cap) {
        throw CapExceeded("balanced decomposition limited to L <= " + std::to_string(cap) + ", got L = " +
                          std::to_string(b.length()));
    }
    Decomposition out;
    std::vector<int> remaining(static_cast<std::size_t>(b.length()));
    std::iota(remaining.begin(), remaining.end(), 0);
    for (;;) {
        // Only columns in the balanced part of what is left can join a block.
        const auto local = balanced_part(b.select_columns(remaining), Execution::Serial);
        if (local.empty()) {
            break;
        }
        std::vector<int> candidates;
        for (int i : local) {
            candidates.push_back(remaining[static_cast<std::size_t>(i)]);
        }
        auto block = smallest_balanced_subset(b, candidates);
        if (!block) {
            throw std::logic_error("nonempty balanced part without a minimal balanced subset");
        }
        std::erase_if(remaining, [&](int k) { return std::find(block->begin(), block->end(), k) != block->end(); });
        out.blocks.push_back(std::move(*block));
        if (remaining.empty()) {
            break;
        }
    }
    out.remainder = remaining;
    return out;
}

PureState construct_max_entangled(const BMatrix &b, const BalanceCertificate &cert) {
    if (cert.size() != static_cast<std::size_t>(b.length()) || !satisfies_balance(b, cert.weights())) {
        throw std::invalid_argument("certificate is not valid for the B-matrix");
    }
    std::vector<Term> terms;
    for (int k = 0; k < b.length(); ++k) {
        terms.push_back({Complex{std::sqrt(static_cast<double>(cert[static_cast<std::size_t>(k)])), 0.0}, b.column(k)});
    }
    return normalize(PureState(QuditSystem(b.q(), b.d()), std::move(terms)));
}

Classification classify(const PureState &state, const ClassifyOptions &options) {
    if (state.q() >= 2 && is_product(state, options.tol)) {
        return Product{};
    }
    const BMatrix b = b_matrix(state);
    if (auto cert = find_certificate(b)) {
        if (is_irreducible(b, *cert)) {
            return IrreduciblyBalanced{std::move(*cert)};
        }
        return BalancedReducible{std::move(*cert), decompose_balanced(b, options.cap)};
    }
    auto support = balanced_part(b, options.exec);
    if (support.empty()) {
        return Unbalanced{};
    }
    const BMatrix sub = b.select_columns(support);
    const auto sub_cert = find_certificate(sub);
    if (!sub_cert) {
        throw std::logic_error("balanced part does not admit a certificate");
    }
    return PartlyBalanced{std::move(support), is_irreducible(sub, *sub_cert)};
}

const char *verdict_name(const Classification &c) {
    struct Namer {
        const char *operator()(const Product &) const { return "product"; }
        const char *operator()(const Unbalanced &) const { return "unbalanced"; }
        const char *operator()(const PartlyBalanced &) const { return "partly_balanced"; }
        const char *operator()(const BalancedReducible &) const { return "balanced_reducible"; }
        const char *operator()(const IrreduciblyBalanced &) const { return "irreducibly_balanced"; }
    };
    return std::visit(Namer{}, c);
}

}  // namespace qudit
