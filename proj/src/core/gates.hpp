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

#include "core/matrix.hpp"

namespace qds::gates {

/// omega_D^exponent with omega_D = exp(2 pi i / dim), the principal Dth root
/// of unity. The exponent is reduced modulo dim before the single complex
/// exponential is evaluated, so repeated powers accumulate no phase drift.
Complex root_of_unity(int dim, long long exponent);

/// Generalized Pauli shift: |s> -> |s (+) power| with addition modulo dim.
/// Negative powers give the inverse shift |s> -> |s (-) |power||.
Matrix pauli_x(int dim, int power = 1);

/// Generalized Pauli clock: diagonal entries omega^{j * power}.
Matrix pauli_z(int dim, int power = 1);

/// Quantum Fourier transform, entries F[j][k] = omega^{jk} / sqrt(dim).
Matrix fourier(int dim);

/// Inverse (adjoint) of fourier(dim).
Matrix fourier_inverse(int dim);

/// Two-quDit controlled gate C(U)|s>|k> = |s> U^s |k>. The system register
/// controls, the port register is the target; u must be a dim x dim unitary.
Matrix controlled(const Matrix& u, int dim);

/// Two-quDit gate |s>|k> -> |s (-) k>|k>: the inverse shift applied to the
/// system register, raised to the value of the port register. The shift power
/// depends on the input port, so this cannot be a fixed local system gate; it
/// is the unique joint unitary whose restriction to port value k acts as the
/// k-fold inverse shift on the system.
Matrix port_controlled_x_dagger(int dim);

/// Two-quDit gate acting as u on the system register when the port register
/// equals path, and as the identity on every other port. Models an optical
/// element placed in a single spatial mode.
Matrix port_conditioned(const Matrix& u, int dim, int path);

enum class GateKind {
    PauliX,
    PauliZ,
    Fourier,
    FourierInverse,
    ControlledX,
    ControlledZ,
    PortControlledXDagger,
    DovePhase,
};

/// Value description of a catalog gate, convertible to its matrix.
struct GateSpec {
    GateKind kind = GateKind::PauliX;
    int dim = 2;
    int power = 1;       ///< reduced modulo dim for the Pauli kinds
    int path = 0;        ///< DovePhase only
    double angle = 0.0;  ///< DovePhase only, radians

    Matrix build() const;

    /// power mod dim, in [0, dim).
    int normalized_power() const;

    /// Short printable name, e.g. "X4^dagger", "Z3", "F5", "C(X4)".
    std::string label() const;
};

}  // namespace qds::gates
