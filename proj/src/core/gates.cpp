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

#include "core/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "core/errors.hpp"
#include "core/state.hpp"

namespace qds::gates {

namespace {

void validate_qudit_dim(int dim) {
    if (dim < 2) {
        throw InvalidArgumentError("quDit dimension must be at least 2, got " +
                                   std::to_string(dim));
    }
    if (dim > kMaxQuditDimension) {
        throw InvalidArgumentError("quDit dimension must not exceed " +
                                   std::to_string(kMaxQuditDimension) +
                                   ", got " + std::to_string(dim));
    }
}

int mod_power(long long power, int dim) {
    const long long m = power % dim;
    return static_cast<int>(m < 0 ? m + dim : m);
}

Matrix checked(Matrix m, const char* what) {
    require_unitary(m, kDefaultTolerance, what);
    return m;
}

}  // namespace

Complex root_of_unity(int dim, long long exponent) {
    validate_qudit_dim(dim);
    const int e = mod_power(exponent, dim);
    if (e == 0) return Complex{1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * e / dim);
}

Matrix pauli_x(int dim, int power) {
    validate_qudit_dim(dim);
    const int p = mod_power(power, dim);
    Matrix m(dim);
    for (int s = 0; s < dim; ++s) {
        m((s + p) % dim, s) = Complex{1.0, 0.0};
    }
    return checked(std::move(m), "pauli_x");
}

Matrix pauli_z(int dim, int power) {
    validate_qudit_dim(dim);
    const int p = mod_power(power, dim);
    Matrix m(dim);
    for (int j = 0; j < dim; ++j) {
        m(j, j) = root_of_unity(dim, static_cast<long long>(j) * p);
    }
    return checked(std::move(m), "pauli_z");
}

Matrix fourier(int dim) {
    validate_qudit_dim(dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    Matrix m(dim);
    for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) {
            m(j, k) = norm * root_of_unity(dim, static_cast<long long>(j) * k);
        }
    }
    return checked(std::move(m), "fourier");
}

Matrix fourier_inverse(int dim) {
    return checked(adjoint(fourier(dim)), "fourier_inverse");
}

Matrix controlled(const Matrix& u, int dim) {
    validate_qudit_dim(dim);
    if (u.dim() != dim) {
        throw DimensionMismatchError("controlled: gate dimension " +
                                     std::to_string(u.dim()) +
                                     " does not match quDit dimension " +
                                     std::to_string(dim));
    }
    Matrix m(dim * dim);
    Matrix block = Matrix::identity(dim);  // u^0
    for (int s = 0; s < dim; ++s) {
        if (s > 0) block = multiply(block, u);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                m(s * dim + i, s * dim + j) = block(i, j);
            }
        }
    }
    return checked(std::move(m), "controlled");
}

Matrix port_controlled_x_dagger(int dim) {
    validate_qudit_dim(dim);
    Matrix m(dim * dim);
    for (int s = 0; s < dim; ++s) {
        for (int k = 0; k < dim; ++k) {
            const int out_s = (s - k + dim) % dim;
            m(JointState::index(out_s, k, dim), JointState::index(s, k, dim)) =
                Complex{1.0, 0.0};
        }
    }
    return checked(std::move(m), "port_controlled_x_dagger");
}

Matrix port_conditioned(const Matrix& u, int dim, int path) {
    validate_qudit_dim(dim);
    if (u.dim() != dim) {
        throw DimensionMismatchError(
            "port_conditioned: gate dimension does not match quDit dimension");
    }
    if (path < 0 || path >= dim) {
        throw InvalidArgumentError("port_conditioned: path index " +
                                   std::to_string(path) + " out of range");
    }
    Matrix m(dim * dim);
    for (int s = 0; s < dim; ++s) {
        for (int k = 0; k < dim; ++k) {
            if (k == path) {
                for (int t = 0; t < dim; ++t) {
                    m(JointState::index(t, k, dim),
                      JointState::index(s, k, dim)) = u(t, s);
                }
            } else {
                m(JointState::index(s, k, dim), JointState::index(s, k, dim)) =
                    Complex{1.0, 0.0};
            }
        }
    }
    return checked(std::move(m), "port_conditioned");
}

Matrix GateSpec::build() const {
    switch (kind) {
        case GateKind::PauliX:
            return pauli_x(dim, power);
        case GateKind::PauliZ:
            return pauli_z(dim, power);
        case GateKind::Fourier:
            return fourier(dim);
        case GateKind::FourierInverse:
            return fourier_inverse(dim);
        case GateKind::ControlledX:
            return controlled(pauli_x(dim, power), dim);
        case GateKind::ControlledZ:
            return controlled(pauli_z(dim, power), dim);
        case GateKind::PortControlledXDagger:
            return port_controlled_x_dagger(dim);
        case GateKind::DovePhase: {
            validate_qudit_dim(dim);
            if (path < 0 || path >= dim) {
                throw InvalidArgumentError("dove phase: path index " +
                                           std::to_string(path) +
                                           " out of range");
            }
            // Phase e^{i 2 s angle} on system value s in the chosen path.
            Matrix m(dim * dim);
            for (int s = 0; s < dim; ++s) {
                for (int k = 0; k < dim; ++k) {
                    const int idx = JointState::index(s, k, dim);
                    m(idx, idx) = (k == path)
                                      ? std::polar(1.0, 2.0 * s * angle)
                                      : Complex{1.0, 0.0};
                }
            }
            return checked(std::move(m), "dove_phase");
        }
    }
    throw InvalidArgumentError("GateSpec: unknown gate kind");
}

int GateSpec::normalized_power() const {
    validate_qudit_dim(dim);
    return mod_power(power, dim);
}

std::string GateSpec::label() const {
    const std::string d = std::to_string(dim);
    auto x_label = [&](int p) {
        if (p == 0) return "I" + d;
        if (p == 1) return "X" + d;
        if (p == dim - 1) return "X" + d + "^dagger";
        return "X" + d + "^" + std::to_string(p);
    };
    switch (kind) {
        case GateKind::PauliX:
            return x_label(normalized_power());
        case GateKind::PauliZ: {
            const int p = normalized_power();
            if (p == 0) return "I" + d;
            if (p == 1) return "Z" + d;
            return "Z" + d + "^" + std::to_string(p);
        }
        case GateKind::Fourier:
            return "F" + d;
        case GateKind::FourierInverse:
            return "F" + d + "^dagger";
        case GateKind::ControlledX:
            return "C(" + x_label(normalized_power()) + ")";
        case GateKind::ControlledZ:
            return "C(Z" + d + ")";
        case GateKind::PortControlledXDagger:
            return "PC(X" + d + "^dagger)";
        case GateKind::DovePhase:
            return "DOVE" + d + "[path=" + std::to_string(path) + "]";
    }
    return "?";
}

}  // namespace qds::gates
