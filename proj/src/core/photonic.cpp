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

#include "core/photonic.hpp"

#include <numbers>
#include <string>

#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/sorters.hpp"

namespace qds::photonic {

namespace {

void validate_dim(int dim) {
    if (dim < 2 || dim > kMaxQuditDimension) {
        throw InvalidArgumentError("photonic layout dimension must lie in [2, " +
                                   std::to_string(kMaxQuditDimension) +
                                   "], got " + std::to_string(dim));
    }
}

}  // namespace

Matrix dove_phase(int dim, int path, double angle) {
    gates::GateSpec spec;
    spec.kind = gates::GateKind::DovePhase;
    spec.dim = dim;
    spec.path = path;
    spec.angle = angle;
    return spec.build();
}

Matrix path_gate(int dim, int path, const Matrix& u) {
    return gates::port_conditioned(u, dim, path);
}

std::vector<double> standard_prism_angles(int dim) {
    validate_dim(dim);
    std::vector<double> angles(static_cast<std::size_t>(dim), 0.0);
    for (int k = 1; k < dim; ++k) {
        angles[static_cast<std::size_t>(k)] = k * std::numbers::pi / dim;
    }
    return angles;
}

const char* to_string(LayoutElement::Kind kind) {
    switch (kind) {
        case LayoutElement::Kind::InputGate:
            return "input_gate";
        case LayoutElement::Kind::Fourier:
            return "fourier";
        case LayoutElement::Kind::DovePrism:
            return "dove_prism";
        case LayoutElement::Kind::FourierInverse:
            return "fourier_inverse";
    }
    return "?";
}

PhotonicLayout PhotonicLayout::standard(int dim) {
    validate_dim(dim);
    PhotonicLayout layout;
    layout.dim = dim;
    layout.input_gate_powers.assign(static_cast<std::size_t>(dim), 0);
    for (int k = 1; k < dim; ++k) {
        // (X^dagger)^k realized as the positive power X^(dim - k).
        layout.input_gate_powers[static_cast<std::size_t>(k)] = (dim - k) % dim;
    }
    layout.prism_angles = standard_prism_angles(dim);
    layout.with_fourier = true;
    return layout;
}

std::vector<LayoutElement> PhotonicLayout::elements() const {
    std::vector<LayoutElement> out;
    for (int k = 1; k < dim; ++k) {
        const int power = input_gate_powers[static_cast<std::size_t>(k)];
        if (power % dim == 0) continue;
        gates::GateSpec spec;
        spec.kind = gates::GateKind::PauliX;
        spec.dim = dim;
        spec.power = power;
        out.push_back(LayoutElement{LayoutElement::Kind::InputGate, k,
                                    spec.label(), 0.0});
    }
    if (with_fourier) {
        out.push_back(LayoutElement{LayoutElement::Kind::Fourier, -1,
                                    "F" + std::to_string(dim), 0.0});
    }
    for (int k = 1; k < dim; ++k) {
        out.push_back(LayoutElement{
            LayoutElement::Kind::DovePrism, k, "DOVE",
            prism_angles[static_cast<std::size_t>(k)]});
    }
    if (with_fourier) {
        out.push_back(LayoutElement{LayoutElement::Kind::FourierInverse, -1,
                                    "F" + std::to_string(dim) + "^dagger",
                                    0.0});
    }
    return out;
}

Matrix build(const PhotonicLayout& layout) {
    validate_dim(layout.dim);
    const int dim = layout.dim;
    if (layout.input_gate_powers.size() != static_cast<std::size_t>(dim) ||
        layout.prism_angles.size() != static_cast<std::size_t>(dim)) {
        throw InvalidArgumentError(
            "photonic layout needs one input-gate power and one prism angle "
            "per path");
    }
    if (layout.input_gate_powers[0] % dim != 0 ||
        layout.prism_angles[0] != 0.0) {
        throw InvalidArgumentError(
            "photonic layout: path 0 carries no input gate and no prism");
    }

    Matrix u = Matrix::identity(dim * dim);
    for (int k = 1; k < dim; ++k) {
        const int power = layout.input_gate_powers[static_cast<std::size_t>(k)];
        if (power % dim == 0) continue;
        u = multiply(path_gate(dim, k, gates::pauli_x(dim, power)), u);
    }
    if (layout.with_fourier) {
        u = multiply(tensor_product(Matrix::identity(dim), gates::fourier(dim)),
                     u);
    }
    for (int k = 1; k < dim; ++k) {
        u = multiply(
            dove_phase(dim, k, layout.prism_angles[static_cast<std::size_t>(k)]),
            u);
    }
    if (layout.with_fourier) {
        u = multiply(tensor_product(Matrix::identity(dim),
                                    gates::fourier_inverse(dim)),
                     u);
    }
    require_unitary(u, kDefaultTolerance, "photonic build");
    return u;
}

Matrix build_photonic_sorter(int dim) {
    return build(PhotonicLayout::standard(dim));
}

Matrix build_polarization_sorter() {
    // Half-wave plate in arm 1, then the polarizing beam splitter.
    Matrix hwp = path_gate(2, 1, gates::pauli_x(2, 1));
    Matrix u = multiply(sorters::build_sqs(2), hwp);
    require_unitary(u, kDefaultTolerance, "build_polarization_sorter");
    return u;
}

}  // namespace qds::photonic
