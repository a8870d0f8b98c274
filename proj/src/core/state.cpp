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

#include "core/state.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace qds {

JointState::JointState(int d_system, int d_port,
                       std::vector<Complex> amplitudes)
    : d_system_(d_system), d_port_(d_port), amplitudes_(std::move(amplitudes)) {
    if (d_system_ < 1 || d_port_ < 1) {
        throw InvalidArgumentError("JointState: factor dimensions must be positive");
    }
    const std::size_t expected =
        static_cast<std::size_t>(d_system_) * static_cast<std::size_t>(d_port_);
    if (amplitudes_.size() != expected) {
        throw DimensionMismatchError(
            "JointState: expected " + std::to_string(expected) +
            " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    for (const Complex& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvalidArgumentError("JointState: amplitudes must be finite");
        }
    }
    if (std::abs(squared_norm() - 1.0) > kDefaultTolerance) {
        throw InvalidArgumentError("JointState: squared norm " +
                                   std::to_string(squared_norm()) +
                                   " is not 1 within tolerance");
    }
}

JointState JointState::basis(int d_system, int d_port, int s, int k) {
    if (s < 0 || s >= d_system || k < 0 || k >= d_port) {
        throw InvalidArgumentError("JointState::basis: label out of range");
    }
    std::vector<Complex> amps(
        static_cast<std::size_t>(d_system) * static_cast<std::size_t>(d_port),
        Complex{0.0, 0.0});
    amps[static_cast<std::size_t>(index(s, k, d_port))] = Complex{1.0, 0.0};
    return JointState(d_system, d_port, std::move(amps));
}

double JointState::squared_norm() const {
    double n = 0.0;
    for (const Complex& a : amplitudes_) n += std::norm(a);
    return n;
}

std::vector<double> JointState::port_probabilities() const {
    std::vector<double> p(static_cast<std::size_t>(d_port_), 0.0);
    for (int s = 0; s < d_system_; ++s) {
        for (int k = 0; k < d_port_; ++k) {
            p[static_cast<std::size_t>(k)] += std::norm(amplitude(s, k));
        }
    }
    return p;
}

std::optional<std::pair<int, int>> JointState::basis_pair(
    double threshold) const {
    for (int s = 0; s < d_system_; ++s) {
        for (int k = 0; k < d_port_; ++k) {
            if (std::norm(amplitude(s, k)) >= 1.0 - threshold) {
                return std::make_pair(s, k);
            }
        }
    }
    return std::nullopt;
}

JointState apply(const Matrix& u, const JointState& psi) {
    if (u.dim() != psi.size()) {
        throw DimensionMismatchError("apply: matrix dimension " +
                                     std::to_string(u.dim()) +
                                     " does not match state dimension " +
                                     std::to_string(psi.size()));
    }
    const int n = u.dim();
    std::vector<Complex> out(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            acc += u(i, j) * psi.amplitudes()[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return JointState(psi.d_system(), psi.d_port(), std::move(out));
}

}  // namespace qds
