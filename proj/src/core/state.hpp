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

#include <optional>
#include <utility>
#include <vector>

#include "core/matrix.hpp"

namespace qds {

/// Normalized state on the system (x) port product space.
///
/// Amplitudes are stored system-major: the coefficient of |s>|k> sits at
/// index s * d_port + k.
class JointState {
public:
    JointState(int d_system, int d_port, std::vector<Complex> amplitudes);

    /// The basis state |s>|k>.
    static JointState basis(int d_system, int d_port, int s, int k);

    static int index(int s, int k, int d_port) { return s * d_port + k; }

    int d_system() const { return d_system_; }
    int d_port() const { return d_port_; }
    int size() const { return static_cast<int>(amplitudes_.size()); }

    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex amplitude(int s, int k) const {
        return amplitudes_[static_cast<std::size_t>(index(s, k, d_port_))];
    }

    double squared_norm() const;

    /// Born weights of a port-register measurement: p[k] = sum_s |<s,k|psi>|^2.
    std::vector<double> port_probabilities() const;

    /// The (s, k) label when the state is a basis state up to the detection
    /// threshold, otherwise nullopt.
    std::optional<std::pair<int, int>> basis_pair(
        double threshold = kBasisStateThreshold) const;

private:
    int d_system_ = 0;
    int d_port_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Matrix-vector action u |psi>. Throws DimensionMismatchError when
/// u.dim() differs from the state dimension.
JointState apply(const Matrix& u, const JointState& psi);

}  // namespace qds
