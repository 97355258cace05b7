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

#include "qudit/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace qudit {

namespace {

void require_shape(const PureState &state, int q, int d, const char *measure) {
    if (state.q() != q || (d > 0 && state.d() != d)) {
        throw std::invalid_argument(std::string(measure) + " requires q = " + std::to_string(q) +
                                    (d > 0 ? ", d = " + std::to_string(d) : std::string()));
    }
}

Eigen::MatrixXcd amplitude_matrix(const PureState &state) {
    const int d = state.d();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &term : state.terms()) {
        m(term.ket[0], term.ket[1]) = term.amplitude;
    }
    return m;
}

}  // namespace

MeasureValue concurrence2(const PureState &state) {
    require_shape(state, 2, 2, "concurrence");
    const Eigen::MatrixXcd psi = amplitude_matrix(state);
    const Complex raw = 2.0 * (psi(0, 0) * psi(1, 1) - psi(0, 1) * psi(1, 0));
    return {"concurrence", std::abs(raw), raw, std::nullopt};
}

MeasureValue two_qudit_det(const PureState &state) {
    require_shape(state, 2, 0, "two-qudit determinant");
    const Complex raw = amplitude_matrix(state).determinant();
    const double d = state.d();
    return {"two_qudit_det", std::abs(raw), raw, d * std::pow(std::abs(raw), 2.0 / d)};
}

MeasureValue three_tangle(const PureState &state) {
    require_shape(state, 3, 2, "three-tangle");
    Complex a[2][2][2] = {};
    for (const auto &term : state.terms()) {
        a[term.ket[0]][term.ket[1]][term.ket[2]] = term.amplitude;
    }
    auto sq = [](Complex x) { return x * x; };
    const Complex d1 = sq(a[0][0][0]) * sq(a[1][1][1]) + sq(a[0][0][1]) * sq(a[1][1][0]) +
                       sq(a[0][1][0]) * sq(a[1][0][1]) + sq(a[1][0][0]) * sq(a[0][1][1]);
    const Complex d2 = a[0][0][0] * a[1][1][1] * a[0][1][1] * a[1][0][0] +
                       a[0][0][0] * a[1][1][1] * a[1][0][1] * a[0][1][0] +
                       a[0][0][0] * a[1][1][1] * a[1][1][0] * a[0][0][1] +
                       a[0][1][1] * a[1][0][0] * a[1][0][1] * a[0][1][0] +
                       a[0][1][1] * a[1][0][0] * a[1][1][0] * a[0][0][1] +
                       a[1][0][1] * a[0][1][0] * a[1][1][0] * a[0][0][1];
    const Complex d3 = a[0][0][0] * a[1][1][0] * a[1][0][1] * a[0][1][1] +
                       a[1][1][1] * a[0][0][1] * a[0][1][0] * a[1][0][0];
    const Complex raw = 4.0 * (d1 - 2.0 * d2 + 4.0 * d3);
    return {"tau3", std::abs(raw), raw, std::nullopt};
}

std::vector<MeasureValue> applicable_measures(const PureState &state) {
    std::vector<MeasureValue> out;
    if (state.q() == 2) {
        if (state.d() == 2) {
            out.push_back(concurrence2(state));
        }
        out.push_back(two_qudit_det(state));
    }
    if (state.q() == 3 && state.d() == 2) {
        out.push_back(three_tangle(state));
    }
    return out;
}

}  // namespace qudit
