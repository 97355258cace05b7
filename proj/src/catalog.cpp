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

#include "qudit/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "qudit/errors.hpp"

namespace qudit {

namespace {

using Cells = std::vector<std::uint8_t>;  // q x L, row-major

// Ordered partition of the columns: `order` lists column indices grouped
// (ascending inside each group), `starts` holds group offsets plus L.
struct Branch {
    std::uint32_t used = 0;
    std::vector<std::uint8_t> order;
    std::vector<std::uint8_t> starts;

    friend bool operator<(const Branch &a, const Branch &b) {
        return std::tie(a.used, a.order, a.starts) < std::tie(b.used, b.order, b.starts);
    }
    friend bool operator==(const Branch &, const Branch &) = default;
};

const std::vector<std::vector<std::uint8_t>> &label_permutations(int d) {
    static const auto table = [] {
        std::vector<std::vector<std::vector<std::uint8_t>>> all(8);
        for (int n = 1; n < 8; ++n) {
            std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
            std::iota(p.begin(), p.end(), std::uint8_t{0});
            do {
                all[static_cast<std::size_t>(n)].push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
        }
        return all;
    }();
    return table.at(static_cast<std::size_t>(d));
}

// Row-by-row minimization: the first k rows of the column-sorted matrix only
// depend on the sites and relabelings chosen for those rows, and branches with
// the same unused sites and column partition have identical futures.
Cells canonical_cells(const Cells &cells, int q, int length, int d) {
    const auto &perms = label_permutations(d);
    const auto len = static_cast<std::size_t>(length);
    Branch root;
    root.order.resize(len);
    std::iota(root.order.begin(), root.order.end(), std::uint8_t{0});
    root.starts = {0, static_cast<std::uint8_t>(length)};
    std::vector<Branch> branches{root};
    Cells result(static_cast<std::size_t>(q) * len);
    std::vector<std::uint8_t> best(len);
    std::vector<std::uint8_t> row(len);
    std::vector<int> counts;

    for (int level = 0; level < q; ++level) {
        bool have_best = false;
        std::vector<Branch> next;
        for (const auto &branch : branches) {
            const std::size_t groups = branch.starts.size() - 1;
            for (int site = 0; site < q; ++site) {
                if (branch.used & (std::uint32_t{1} << site)) {
                    continue;
                }
                const std::uint8_t *labels = cells.data() + static_cast<std::size_t>(site) * len;
                counts.assign(groups * static_cast<std::size_t>(d), 0);
                for (std::size_t g = 0; g < groups; ++g) {
                    for (std::size_t p = branch.starts[g]; p < branch.starts[g + 1]; ++p) {
                        ++counts[g * static_cast<std::size_t>(d) + labels[branch.order[p]]];
                    }
                }
                for (const auto &inv : perms) {
                    // Build the row for relabeling new -> inv[new], abandoning it
                    // as soon as it exceeds the best row so far.
                    int cmp = have_best ? 0 : -1;
                    std::size_t pos = 0;
                    for (std::size_t g = 0; g < groups && cmp <= 0; ++g) {
                        for (int label = 0; label < d && cmp <= 0; ++label) {
                            int n = counts[g * static_cast<std::size_t>(d) + inv[static_cast<std::size_t>(label)]];
                            for (; n > 0; --n, ++pos) {
                                row[pos] = static_cast<std::uint8_t>(label);
                                if (cmp == 0 && row[pos] != best[pos]) {
                                    cmp = row[pos] < best[pos] ? -1 : 1;
                                    if (cmp > 0) {
                                        break;
                                    }
                                }
                            }
                        }
                    }
                    if (cmp > 0) {
                        continue;
                    }
                    if (cmp < 0) {
                        best = row;
                        have_best = true;
                        next.clear();
                    }
                    Branch child;
                    child.used = branch.used | (std::uint32_t{1} << site);
                    child.order.reserve(len);
                    child.starts.push_back(0);
                    for (std::size_t g = 0; g < groups; ++g) {
                        for (int label = 0; label < d; ++label) {
                            const auto old = inv[static_cast<std::size_t>(label)];
                            const std::size_t before = child.order.size();
                            for (std::size_t p = branch.starts[g]; p < branch.starts[g + 1]; ++p) {
                                if (labels[branch.order[p]] == old) {
                                    child.order.push_back(branch.order[p]);
                                }
                            }
                            if (child.order.size() != before) {
                                child.starts.push_back(static_cast<std::uint8_t>(child.order.size()));
                            }
                        }
                    }
                    next.push_back(std::move(child));
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::copy(best.begin(), best.end(), result.begin() + static_cast<std::ptrdiff_t>(level) * length);
        branches = std::move(next);
    }
    return result;
}

Cells to_cells(const BMatrix &b) {
    Cells cells;
    cells.reserve(static_cast<std::size_t>(b.q() * b.length()));
    for (int l = 0; l < b.q(); ++l) {
        for (int k = 0; k < b.length(); ++k) {
            cells.push_back(static_cast<std::uint8_t>(b(l, k)));
        }
    }
    return cells;
}

BMatrix from_cells(const Cells &cells, int q, int length, int d) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(q));
    for (int l = 0; l < q; ++l) {
        rows[static_cast<std::size_t>(l)].assign(cells.begin() + l * length, cells.begin() + (l + 1) * length);
    }
    return BMatrix(d, rows);
}

std::uint64_t checked_power(int base, int exponent) {
    std::uint64_t n = 1;
    for (int i = 0; i < exponent; ++i) {
        n *= static_cast<std::uint64_t>(base);
    }
    return n;
}

// C(n, k), saturating at limit + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    long double value = 1.0L;
    for (std::uint64_t i = 1; i <= k; ++i) {
        value = value * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (value > static_cast<long double>(limit)) {
            return limit + 1;
        }
    }
    return static_cast<std::uint64_t>(value + 0.5L);
}

void check_caps(int q, int d, int length, const EnumerationCaps &caps) {
    if (q < 1 || d < 2 || length < 1) {
        throw std::invalid_argument("enumeration needs q >= 1, d >= 2, L >= 1");
    }
    if (q > caps.max_q || d > caps.max_d || length > caps.max_length) {
        throw CapExceeded("enumeration limited to q <= " + std::to_string(caps.max_q) + ", d <= " +
                          std::to_string(caps.max_d) + ", L <= " + std::to_string(caps.max_length));
    }
    if (q * length > caps.max_cells) {
        throw CapExceeded("enumeration limited to q*L <= " + std::to_string(caps.max_cells) + " cells, got " +
                          std::to_string(q * length));
    }
    const std::uint64_t kets = checked_power(d, q);
    if (static_cast<std::uint64_t>(length) > kets) {
        throw std::invalid_argument("L = " + std::to_string(length) + " distinct columns impossible: only " +
                                    std::to_string(kets) + " kets exist");
    }
    if (binomial_capped(kets - 1, static_cast<std::uint64_t>(length - 1), caps.max_subsets) > caps.max_subsets) {
        throw CapExceeded("enumeration would examine more than " + std::to_string(caps.max_subsets) +
                          " column sets");
    }
}

}  // namespace

BMatrix canonical_form(const BMatrix &b) {
    if (b.q() > 32 || b.length() > 255 || b.d() > 7) {
        throw CapExceeded("canonical form limited to q <= 32, L <= 255, d <= 7");
    }
    return from_cells(canonical_cells(to_cells(b), b.q(), b.length(), b.d()), b.q(), b.length(), b.d());
}

std::vector<CanonicalBMatrix> enumerate_b_matrices(int q, int d, int length, const EnumerationCaps &caps,
                                                   Execution exec) {
    check_caps(q, d, length, caps);
    const int kets = static_cast<int>(checked_power(d, q));
    std::vector<Cells> digits(static_cast<std::size_t>(kets), Cells(static_cast<std::size_t>(q)));
    for (int code = 0; code < kets; ++code) {
        int rest = code;
        for (int l = q - 1; l >= 0; --l) {
            digits[static_cast<std::size_t>(code)][static_cast<std::size_t>(l)] = static_cast<std::uint8_t>(rest % d);
            rest /= d;
        }
    }
    const auto len = static_cast<std::size_t>(length);
    auto cells_of = [&](const std::vector<int> &codes) {
        Cells cells(static_cast<std::size_t>(q) * len);
        for (std::size_t k = 0; k < len; ++k) {
            for (int l = 0; l < q; ++l) {
                cells[static_cast<std::size_t>(l) * len + k] = digits[static_cast<std::size_t>(codes[k])][static_cast<std::size_t>(l)];
            }
        }
        return cells;
    };

    // Every orbit contains a column set holding the all-zero ket, so only
    // those sets are generated: code 0 plus (L-1) codes from 1..kets-1.
    std::set<std::string> keys;
    auto insert_key = [](std::unordered_set<std::string> &out, const Cells &canonical) {
        out.emplace(canonical.begin(), canonical.end());
    };
    if (length == 1) {
        std::unordered_set<std::string> local;
        insert_key(local, canonical_cells(cells_of({0}), q, 1, d));
        keys.insert(local.begin(), local.end());
    } else {
        const std::size_t outer = static_cast<std::size_t>(kets - 1);
        std::vector<std::unordered_set<std::string>> found(outer);
        for_each_index(exec, outer, [&](std::size_t index) {
            const int first = static_cast<int>(index) + 1;
            std::vector<int> codes(len);
            codes[0] = 0;
            codes[1] = first;
            const int tail = length - 2;
            if (kets - 1 - first < tail) {
                return;
            }
            // codes[2..] range over ascending tail-combinations of first+1..kets-1
            for (int i = 0; i < tail; ++i) {
                codes[static_cast<std::size_t>(2 + i)] = first + 1 + i;
            }
            for (;;) {
                insert_key(found[index], canonical_cells(cells_of(codes), q, length, d));
                int pos = tail - 1;
                while (pos >= 0 && codes[static_cast<std::size_t>(2 + pos)] == kets - tail + pos) {
                    --pos;
                }
                if (pos < 0) {
                    break;
                }
                ++codes[static_cast<std::size_t>(2 + pos)];
                for (int i = pos + 1; i < tail; ++i) {
                    codes[static_cast<std::size_t>(2 + i)] = codes[static_cast<std::size_t>(1 + i)] + 1;
                }
            }
        });
        for (auto &local : found) {
            keys.insert(local.begin(), local.end());
        }
    }
    std::vector<CanonicalBMatrix> out;
    out.reserve(keys.size());
    for (const auto &key : keys) {
        out.emplace_back(from_cells(Cells(key.begin(), key.end()), q, length, d));
    }
    return out;
}

CatalogEntry analyze(const CanonicalBMatrix &b) {
    CatalogEntry entry{b, find_certificate(b.matrix()), false};
    if (entry.certificate) {
        entry.irreducible = is_irreducible(b.matrix(), *entry.certificate);
    }
    return entry;
}

std::vector<CatalogEntry> catalog(int q, int d, int length, const EnumerationCaps &caps, Execution exec) {
    const auto classes = enumerate_b_matrices(q, d, length, caps, exec);
    std::vector<std::optional<CatalogEntry>> slots(classes.size());
    for_each_index(exec, classes.size(), [&](std::size_t k) { slots[k] = analyze(classes[k]); });
    std::vector<CatalogEntry> out;
    out.reserve(slots.size());
    for (auto &slot : slots) {
        out.push_back(std::move(*slot));
    }
    return out;
}

std::vector<CatalogEntry> enumerate_irreducible(int q, int d, int max_length, const EnumerationCaps &caps,
                                                Execution exec) {
    const int bound = (d - 1) * q + 1;
    if (max_length > bound + caps.slack) {
        throw CapExceeded("L_max = " + std::to_string(max_length) + " exceeds (d-1)q+1+slack = " +
                          std::to_string(bound + caps.slack));
    }
    const int top = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(max_length), checked_power(d, q)));
    std::vector<CatalogEntry> out;
    for (int length = 1; length <= top; ++length) {
        for (auto &entry : catalog(q, d, length, caps, exec)) {
            if (entry.irreducible) {
                out.push_back(std::move(entry));
            }
        }
    }
    return out;
}

LengthBoundReport verify_length_bound(int q, int d, const EnumerationCaps &caps, Execution exec) {
    LengthBoundReport report{q, d, (d - 1) * q + 1, {}, {}};
    const std::uint64_t kets = checked_power(d, q);
    const int top = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(report.bound + 2), kets));
    for (int length = report.bound + 1; length <= top; ++length) {
        LengthCount count{length, 0, 0, 0};
        for (const auto &entry : catalog(q, d, length, caps, exec)) {
            ++count.classes;
            if (entry.certificate) {
                ++count.balanced;
            }
            if (entry.irreducible) {
                ++count.irreducible;
                report.counterexamples.push_back(entry.b.matrix());
            }
        }
        report.lengths.push_back(count);
    }
    return report;
}

}  // namespace qudit
