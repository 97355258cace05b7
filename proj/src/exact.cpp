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

#include "qudit/exact.hpp"

#include <stdexcept>

namespace qudit::exact {

RationalVector RationalMatrix::multiply(const RationalVector &x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("matrix-vector size mismatch");
    }
    RationalVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (sgn((*this)(r, c)) != 0) {
                y[r] += (*this)(r, c) * x[c];
            }
        }
    }
    return y;
}

RowEchelon row_reduce(RationalMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            for (std::size_t k = 0; k < cols; ++k) {
                std::swap(m(p, k), m(r, k));
            }
        }
        const Rational inv = 1 / m(r, c);
        for (std::size_t k = c; k < cols; ++k) {
            m(r, k) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) {
                continue;
            }
            const Rational factor = m(i, c);
            for (std::size_t k = c; k < cols; ++k) {
                m(i, k) -= factor * m(r, k);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    RowEchelon out;
    out.reduced = RationalMatrix(r, cols);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            out.reduced(i, k) = m(i, k);
        }
    }
    out.pivots = pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (next < pivots.size() && pivots[next] == c) {
            ++next;
        } else {
            out.free.push_back(c);
        }
    }
    return out;
}

std::size_t rank(const RationalMatrix &m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix &m) {
    const RowEchelon ech = row_reduce(m);
    std::vector<RationalVector> basis;
    for (std::size_t f : ech.free) {
        RationalVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            v[ech.pivots[i]] = -ech.reduced(i, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Simplex tableau: rows_ constraint rows plus an objective row, last column is the rhs.
// The objective row holds reduced costs z_j - c_j for a maximization problem.
class Tableau {
   public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows + 1, RationalVector(cols + 1)), basis_(rows) {}

    Rational &at(std::size_t r, std::size_t c) { return t_[r][c]; }
    Rational &rhs(std::size_t r) { return t_[r][cols_]; }
    Rational &cost(std::size_t c) { return t_[rows_][c]; }
    Rational &objective() { return t_[rows_][cols_]; }
    std::vector<std::size_t> &basis() { return basis_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = 1 / t_[r][c];
        for (auto &v : t_[r]) {
            if (sgn(v) != 0) {
                v *= inv;
            }
        }
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == r || sgn(t_[i][c]) == 0) {
                continue;
            }
            const Rational factor = t_[i][c];
            for (std::size_t k = 0; k <= cols_; ++k) {
                if (sgn(t_[r][k]) != 0) {
                    t_[i][k] -= factor * t_[r][k];
                }
            }
        }
        basis_[r] = c;
    }

    // Runs Bland's rule over the columns [0, limit). Returns false if unbounded.
    bool optimize(std::size_t limit) {
        for (;;) {
            std::size_t entering = limit;
            for (std::size_t c = 0; c < limit; ++c) {
                if (sgn(t_[rows_][c]) < 0) {
                    entering = c;
                    break;
                }
            }
            if (entering == limit) {
                return true;
            }
            std::size_t leaving = rows_;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (sgn(t_[r][entering]) <= 0) {
                    continue;
                }
                Rational ratio = t_[r][cols_] / t_[r][entering];
                if (leaving == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
                    best = ratio;
                    leaving = r;
                }
            }
            if (leaving == rows_) {
                return false;
            }
            pivot(leaving, entering);
        }
    }

    void drop_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --rows_;
    }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RationalVector> t_;
    std::vector<std::size_t> basis_;
};

// Phase one. On success the tableau has a feasible basis of original columns
// (redundant rows removed) and the artificial columns are still present.
bool phase_one(Tableau &tab, const RationalMatrix &a, const RationalVector &b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = sgn(b[r]) < 0;
        for (std::size_t c = 0; c < n; ++c) {
            tab.at(r, c) = flip ? Rational(-a(r, c)) : a(r, c);
        }
        tab.at(r, n + r) = 1;
        tab.rhs(r) = flip ? Rational(-b[r]) : b[r];
        tab.basis()[r] = n + r;
    }
    // maximize -sum(artificials)
    for (std::size_t c = 0; c < n; ++c) {
        Rational s;
        for (std::size_t r = 0; r < m; ++r) {
            s -= tab.at(r, c);
        }
        tab.cost(c) = s;
    }
    Rational total;
    for (std::size_t r = 0; r < m; ++r) {
        total -= tab.rhs(r);
    }
    tab.objective() = total;
    tab.optimize(n + m);
    if (sgn(tab.objective()) != 0) {
        return false;
    }
    for (std::size_t r = 0; r < tab.rows();) {
        if (tab.basis()[r] < n) {
            ++r;
            continue;
        }
        std::size_t c = 0;
        while (c < n && sgn(tab.at(r, c)) == 0) {
            ++c;
        }
        if (c == n) {
            tab.drop_row(r);
        } else {
            tab.pivot(r, c);
            ++r;
        }
    }
    return true;
}

}  // namespace

LpResult maximize(const RationalMatrix &a, const RationalVector &b, const RationalVector &c) {
    if (b.size() != a.rows() || c.size() != a.cols()) {
        throw std::invalid_argument("LP dimension mismatch");
    }
    const std::size_t n = a.cols();
    Tableau tab(a.rows(), n + a.rows());
    LpResult result;
    if (!phase_one(tab, a, b)) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    // Phase two objective over the original columns only.
    for (std::size_t k = 0; k <= tab.cols(); ++k) {
        if (k < n) {
            Rational z;
            for (std::size_t r = 0; r < tab.rows(); ++r) {
                z += c[tab.basis()[r]] * tab.at(r, k);
            }
            tab.cost(k) = z - c[k];
        } else if (k == tab.cols()) {
            Rational z;
            for (std::size_t r = 0; r < tab.rows(); ++r) {
                z += c[tab.basis()[r]] * tab.rhs(r);
            }
            tab.objective() = z;
        } else {
            tab.cost(k) = 0;
        }
    }
    if (!tab.optimize(n)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < tab.rows(); ++r) {
        result.x[tab.basis()[r]] = tab.rhs(r);
    }
    result.objective = tab.objective();
    return result;
}

bool feasible(const RationalMatrix &a, const RationalVector &b) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("LP dimension mismatch");
    }
    Tableau tab(a.rows(), a.cols() + a.rows());
    return phase_one(tab, a, b);
}

std::vector<long long> primitive_integer_vector(const RationalVector &x) {
    mpz_class lcm = 1;
    for (const auto &v : x) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<mpz_class> scaled;
    mpz_class g = 0;
    for (const auto &v : x) {
        mpz_class s = v.get_num() * (lcm / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
        scaled.push_back(s);
    }
    std::vector<long long> out;
    for (auto &s : scaled) {
        if (g != 0) {
            s /= g;
        }
        if (!s.fits_slong_p()) {
            throw std::overflow_error("certificate entry does not fit in 64 bits");
        }
        out.push_back(s.get_si());
    }
    return out;
}

}  // namespace qudit::exact
