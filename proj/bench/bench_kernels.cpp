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

// Serial reference against the OpenMP path for each parallel kernel.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qudit/balance.hpp"
#include "qudit/catalog.hpp"
#include "qudit/filtering.hpp"
#include "qudit/verify.hpp"

namespace {

using namespace qudit;

Execution policy(const benchmark::State &state) {
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_Enumerate(benchmark::State &state) {
    const Execution exec = policy(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_b_matrices(3, 3, 7, {}, exec));
    }
}
BENCHMARK(BM_Enumerate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Catalog(benchmark::State &state) {
    const Execution exec = policy(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(catalog(3, 2, 6, {}, exec));
    }
}
BENCHMARK(BM_Catalog)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BalancedPart(benchmark::State &state) {
    const Execution exec = policy(state);
    std::vector<BMatrix> inputs;
    for (const auto &b : enumerate_b_matrices(3, 3, 8, {}, Execution::Serial)) {
        inputs.push_back(b.matrix());
        if (inputs.size() == 200) {
            break;
        }
    }
    for (auto _ : state) {
        for (const auto &b : inputs) {
            benchmark::DoNotOptimize(balanced_part(b, exec));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * inputs.size()));
}
BENCHMARK(BM_BalancedPart)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NormalFormBatch(benchmark::State &state) {
    const Execution exec = policy(state);
    std::mt19937_64 rng(11);
    const auto states = catalog_sample(4, 2, 64, rng, {}, Execution::Serial);
    NormalFormOptions options;
    options.max_sweeps = 2000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form_batch(states, options, exec));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * states.size()));
}
BENCHMARK(BM_NormalFormBatch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
