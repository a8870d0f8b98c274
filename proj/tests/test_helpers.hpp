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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "core/matrix.hpp"

namespace testutil {

// Haar-ish random unitary: Gaussian complex matrix, then Gram-Schmidt on the
// columns. Good enough for algebraic property tests.
inline qds::Matrix random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    qds::Matrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m(i, j) = qds::Complex{gauss(rng), gauss(rng)};
        }
    }
    for (int col = 0; col < dim; ++col) {
        for (int prev = 0; prev < col; ++prev) {
            qds::Complex overlap{0.0, 0.0};
            for (int row = 0; row < dim; ++row) {
                overlap += std::conj(m(row, prev)) * m(row, col);
            }
            for (int row = 0; row < dim; ++row) {
                m(row, col) -= overlap * m(row, prev);
            }
        }
        double norm = 0.0;
        for (int row = 0; row < dim; ++row) norm += std::norm(m(row, col));
        norm = std::sqrt(norm);
        for (int row = 0; row < dim; ++row) m(row, col) /= norm;
    }
    return m;
}

// Random normalized amplitude vector.
inline std::vector<qds::Complex> random_state(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<qds::Complex> v(static_cast<std::size_t>(dim));
    double norm = 0.0;
    for (auto& a : v) {
        a = qds::Complex{gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : v) a /= norm;
    return v;
}

// Independent oracle for global-phase equality: scan a dense phase grid and
// return the smallest max-entry distance found. Shares nothing with
// compare_up_to_global_phase beyond max_abs_diff.
inline double min_phase_distance_grid(const qds::Matrix& a,
                                      const qds::Matrix& b, int steps = 3600) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < steps; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / steps;
        const double d =
            qds::max_abs_diff(a, qds::scale(b, std::polar(1.0, theta)));
        if (d < best) best = d;
    }
    return best;
}

}  // namespace testutil
