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

#ifndef QUDIT_VERIFY_HPP
#define QUDIT_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "qudit/balance.hpp"
#include "qudit/catalog.hpp"
#include "qudit/filtering.hpp"

namespace qudit {

struct SuiteConfig {
    std::uint64_t seed = 1;
    int samples = 100;
    double tol = kDefaultTolerance;
    int cap_l = 24;  // subset-search cap for classify
    NormalFormOptions normal_form;
    EnumerationCaps caps;
    Execution exec = Execution::Parallel;
};

struct TheoremReport {
    int theorem = 0;
    int q = 0;
    int d = 0;
    bool passed = false;
    std::size_t cases = 0;
    nlohmann::json details = nlohmann::json::object();
    std::vector<std::string> counterexamples;
};

/// Normalized product of random local vectors. With full_support each local
/// vector has every component nonzero; otherwise a random nonempty subset.
PureState random_product_state(int q, int d, std::mt19937_64 &rng, bool full_support);

/// Normalized state on the columns of b with log-magnitudes uniform in
/// [-1, 1] and uniform phases.
PureState random_amplitude_state(const BMatrix &b, std::mt19937_64 &rng);

/// `count` states drawn round-robin from the irreducible catalog of (q, d),
/// each with fresh random amplitudes. Empty if the catalog is empty.
std::vector<PureState> catalog_sample(int q, int d, int count, std::mt19937_64 &rng, const EnumerationCaps &caps,
                                      Execution exec);

/// Runs the property check for one theorem (1..5) at the given (q, d).
TheoremReport verify_theorem(int theorem, int q, int d, const SuiteConfig &config);

}  // namespace qudit

#endif  // QUDIT_VERIFY_HPP
