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

#ifndef QUDIT_ERRORS_HPP
#define QUDIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qudit {

/// A state, B-matrix or catalog document that does not conform to its format.
class FormatError : public std::invalid_argument {
   public:
    explicit FormatError(const std::string &what) : std::invalid_argument(what) {}
};

/// An enumeration or search would exceed a configured desk-scale cap.
class CapExceeded : public std::length_error {
   public:
    explicit CapExceeded(const std::string &what) : std::length_error(what) {}
};

/// A local reduced density matrix is singular: the state occupies a smaller local space.
class RankDeficientError : public std::runtime_error {
   public:
    RankDeficientError(int site, double min_eigenvalue)
        : std::runtime_error("reduced density matrix of site " + std::to_string(site + 1) +
                             " is rank deficient (smallest normalized eigenvalue " +
                             std::to_string(min_eigenvalue) + ")"),
          site_(site),
          min_eigenvalue_(min_eigenvalue) {}
    int site() const noexcept { return site_; }
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

   private:
    int site_;
    double min_eigenvalue_;
};

/// The amplitude-equalization system has no solution within tolerance.
class InconsistentSystemError : public std::runtime_error {
   public:
    explicit InconsistentSystemError(double residual)
        : std::runtime_error("amplitude equalization system is inconsistent (residual " +
                             std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

   private:
    double residual_;
};

}  // namespace qudit

#endif  // QUDIT_ERRORS_HPP
