// Copyright 2026 The quditsort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace qds::verify {

/// Outcome of one named check at one dimension.
struct CheckResult {
    std::string name;
    int dim = 0;
    bool passed = false;
    double residual = 0.0;  ///< largest deviation the check observed
};

inline constexpr int kMaxVerifyDimension = 16;

/// Runs the full invariant suite for every dimension in [dmin, dmax]:
/// gate unitarity, Weyl commutation, Pauli power cycles, Fourier conjugation,
/// the Fourier decomposition of the single-input-port sorter, the
/// factorization of the multi-input-port sorter, the perfect-sorter
/// infeasibility scan, the sorting-port scans, the Dove prism assembly, and
/// the photonic-model equivalence. Results come back in dimension order.
/// Requires 2 <= dmin <= dmax <= kMaxVerifyDimension and a tolerance in
/// [1e-12, 1e-6].
std::vector<CheckResult> run_suite(int dmin, int dmax,
                                   double tol = kDefaultTolerance);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qds::verify
