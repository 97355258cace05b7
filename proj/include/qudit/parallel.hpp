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

#ifndef QUDIT_PARALLEL_HPP
#define QUDIT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

namespace qudit {

/// Selects between the OpenMP kernel and the serial reference path.
enum class Execution { Serial, Parallel };

/// Runs body(i) for i in [0, n). Iterations must be independent; callers
/// write results into pre-sized slots indexed by i so the merge order is
/// deterministic. The first exception thrown by any iteration is rethrown.
template <typename Body>
void for_each_index(Execution exec, std::size_t n, Body &&body) {
    if (exec == Execution::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
#if defined(_OPENMP)
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (failure) {
                continue;
            }
        }
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
#else
    for (std::size_t i = 0; i < n; ++i) {
        body(i);
    }
#endif
}

}  // namespace qudit

#endif  // QUDIT_PARALLEL_HPP
