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

#ifndef QUDIT_MEASURES_HPP
#define QUDIT_MEASURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "qudit/state.hpp"

namespace qudit {

struct MeasureValue {
    std::string name;
    double value;                     // |raw| scaled per measure
    Complex raw;                      // polynomial value before the modulus
    std::optional<double> normalized; // d * |det|^(2/d) for the two-qudit determinant
};

/// 2 (psi_00 psi_11 - psi_01 psi_10) for two qubits.
MeasureValue concurrence2(const PureState &state);

/// Determinant of the d x d amplitude matrix of two qudits.
MeasureValue two_qudit_det(const PureState &state);

/// Three-qubit tangle 4 |d1 - 2 d2 + 4 d3|.
MeasureValue three_tangle(const PureState &state);

/// Every measure whose shape requirements the state meets (possibly none).
std::vector<MeasureValue> applicable_measures(const PureState &state);

}  // namespace qudit

#endif  // QUDIT_MEASURES_HPP
