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

#ifndef QUDIT_FILTERING_HPP
#define QUDIT_FILTERING_HPP

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qudit/balance.hpp"
#include "qudit/parallel.hpp"
#include "qudit/state.hpp"

namespace qudit {

/// A determinant-one local operator acting on one site (0-based).
class LocalFilter {
   public:
    /// Throws std::invalid_argument if |det(matrix) - 1| > 1e-10.
    LocalFilter(int site, Eigen::MatrixXcd matrix);

    int site() const noexcept { return site_; }
    const Eigen::MatrixXcd &matrix() const noexcept { return matrix_; }

   private:
    int site_;
    Eigen::MatrixXcd matrix_;
};

struct EqualizationResult {
    std::vector<LocalFilter> filters;  // one diagonal filter per site
    PureState state;                   // filtered and renormalized
    double residual;                   // log-magnitude least-squares residual
    double phase_residual;
    double max_off_diagonal;           // largest |rho_i(s, s')|, s != s', after filtering
    bool off_diagonal_flag;            // max_off_diagonal exceeded 1e-8
};

/// Diagonal determinant-one filters that bring every amplitude magnitude to
/// c * sqrt(n_k). Throws InconsistentSystemError if the least-squares residual
/// exceeds 1e-8 and std::invalid_argument if cert does not balance the support.
EqualizationResult equalize_amplitudes(const PureState &state, const BalanceCertificate &cert);

struct NormalFormOptions {
    int max_sweeps = 10000;
    double tol = 1e-9;
    double null_tol = 1e-6;
};

enum class NormalFormVerdict { Converged, NullCone, Indeterminate };

struct NormalFormOutcome {
    NormalFormVerdict verdict;
    std::optional<PureState> state;       // normalized stochastic state when Converged
    std::vector<LocalFilter> filters;     // accumulated filter per site
    int iterations = 0;                   // full sweeps performed
    std::vector<double> norm_trajectory;  // norm before the first sweep, then after each sweep
    double final_norm = 0.0;
};

/// Alternating local scaling towards identity/d reductions.
/// Throws RankDeficientError when a reduction is singular.
NormalFormOutcome normal_form(const PureState &state, const NormalFormOptions &options = {});

/// Independent normal_form runs, results in input order.
std::vector<NormalFormOutcome> normal_form_batch(std::span<const PureState> states, const NormalFormOptions &options,
                                                 Execution exec = Execution::Parallel);

/// Per-site product of the filters in application order (later filters on the left).
std::vector<Eigen::MatrixXcd> compose_filters(std::span<const LocalFilter> filters, const QuditSystem &system);

const char *verdict_name(NormalFormVerdict verdict);

}  // namespace qudit

#endif  // QUDIT_FILTERING_HPP
