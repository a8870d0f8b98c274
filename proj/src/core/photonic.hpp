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

namespace qds::photonic {

/// Dove prism in one path, rotated by `angle`: applies the phase
/// e^{i 2 s angle} to orbital-angular-momentum value s when the port register
/// equals path, identity elsewhere. At angle = k pi / dim this is exactly the
/// Z^k block of the controlled-Z gate, conditioned on port k.
Matrix dove_phase(int dim, int path, double angle);

/// Single optical element acting as u on the system register in one path.
Matrix path_gate(int dim, int path, const Matrix& u);

/// Prism rotation angles k pi / dim for paths k = 0 .. dim-1. Path 0 carries
/// no prism; its slot is 0.
std::vector<double> standard_prism_angles(int dim);

/// One element of the optical layout, in application order.
struct LayoutElement {
    enum class Kind { InputGate, Fourier, DovePrism, FourierInverse };
    Kind kind = Kind::InputGate;
    int path = -1;  ///< -1 when the element spans all paths
    std::string label;
    double angle = 0.0;  ///< radians; prisms only
};

const char* to_string(LayoutElement::Kind kind);

/// Gate-level description of the multi-path sorter: per-path input shift
/// powers, per-path prism angles, and the surrounding Fourier pair on the
/// path register. Path 0 carries no input gate and no prism.
struct PhotonicLayout {
    int dim = 4;
    std::vector<int> input_gate_powers;  ///< X power per path; 0 = no gate
    std::vector<double> prism_angles;    ///< radians per path; path 0 unused
    bool with_fourier = true;

    /// The layout that realizes the multi-input-port sorter: path k carries
    /// the shift power (dim - k) mod dim and the prism angle k pi / dim.
    static PhotonicLayout standard(int dim);

    /// Elements in application order (input gates, Fourier, prisms,
    /// inverse Fourier).
    std::vector<LayoutElement> elements() const;
};

/// Composes the layout into a joint-space unitary: per-path input gates,
/// Fourier on the port register, per-path prisms, inverse Fourier.
Matrix build(const PhotonicLayout& layout);

/// The standard dim-path sorter; equals build_mqs(dim) up to a global phase.
/// The concrete instrument is the four-path sorter of photons carrying
/// four-dimensional orbital angular momentum (dim = 4).
Matrix build_photonic_sorter(int dim = 4);

/// Two-path polarization sorter: a half-wave plate in input arm 1 (the
/// polarization flip X, conditioned on the port) followed by a polarizing
/// beam splitter, whose action is the dim-2 single-input-port sorter.
/// Equals build_mqs(2).
Matrix build_polarization_sorter();

}  // namespace qds::photonic
