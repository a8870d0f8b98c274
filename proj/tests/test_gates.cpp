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

#include <cmath>
#include <numbers>
#include <random>

#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/state.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace qds;
using namespace qds::gates;

namespace {

Complex entry_of(const Matrix& m, int row, int col) { return m(row, col); }

}  // namespace

TEST_CASE("pauli_x shifts basis states cyclically") {
    SUBCASE("qubit flip") {
        const Matrix x = pauli_x(2, 1);
        CHECK(std::abs(entry_of(x, 1, 0) - Complex{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(entry_of(x, 0, 1) - Complex{1.0, 0.0}) < 1e-15);
    }

    SUBCASE("negative power inverts: |1> -> |0> at D=3") {
        const Matrix x_inv = pauli_x(3, -1);
        CHECK(std::abs(entry_of(x_inv, 0, 1) - Complex{1.0, 0.0}) < 1e-15);
    }

    SUBCASE("full cycle is the identity") {
        for (int d = 2; d <= 8; ++d) {
            CHECK(max_abs_diff(pauli_x(d, d), Matrix::identity(d)) == 0.0);
        }
    }

    SUBCASE("power additivity mod D") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<int> pw(-10, 10);
        for (int d : {2, 3, 5, 7}) {
            for (int trial = 0; trial < 4; ++trial) {
                const int a = pw(rng);
                const int b = pw(rng);
                CHECK(max_abs_diff(multiply(pauli_x(d, a), pauli_x(d, b)),
                                   pauli_x(d, a + b)) < 1e-10);
                CHECK(max_abs_diff(multiply(pauli_z(d, a), pauli_z(d, b)),
                                   pauli_z(d, a + b)) < 1e-10);
            }
        }
    }

    CHECK_THROWS_AS(pauli_x(1, 1), InvalidArgumentError);
    CHECK_THROWS_AS(pauli_x(65, 1), InvalidArgumentError);
}

TEST_CASE("pauli_z is the diagonal root-of-unity gate") {
    SUBCASE("qubit case is diag(1, -1)") {
        const Matrix z = pauli_z(2, 1);
        CHECK(std::abs(entry_of(z, 0, 0) - Complex{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(entry_of(z, 1, 1) - Complex{-1.0, 0.0}) < 1e-15);
        CHECK(std::abs(entry_of(z, 0, 1)) == 0.0);
    }

    SUBCASE("phase on |2> at D=3") {
        // omega^2 = exp(4 pi i / 3); frozen from direct evaluation.
        const Complex expected{-0.5, -std::sqrt(3.0) / 2.0};
        CHECK(std::abs(entry_of(pauli_z(3, 1), 2, 2) - expected) < 1e-15);
    }

    SUBCASE("power 0 is the identity") {
        for (int d : {2, 5, 11}) {
            CHECK(max_abs_diff(pauli_z(d, 0), Matrix::identity(d)) == 0.0);
        }
    }

    CHECK_THROWS_AS(pauli_z(0, 1), InvalidArgumentError);
}

TEST_CASE("weyl commutation Z X = omega X Z") {
    for (int d = 2; d <= 16; ++d) {
        const Matrix x = pauli_x(d, 1);
        const Matrix z = pauli_z(d, 1);
        CHECK(max_abs_diff(multiply(z, x),
                           scale(multiply(x, z), root_of_unity(d, 1))) <
              1e-10);
    }
}

TEST_CASE("fourier gate") {
    SUBCASE("qubit case is the Hadamard") {
        const Matrix f = fourier(2);
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(entry_of(f, 0, 0) - Complex{r, 0.0}) < 1e-15);
        CHECK(std::abs(entry_of(f, 0, 1) - Complex{r, 0.0}) < 1e-15);
        CHECK(std::abs(entry_of(f, 1, 0) - Complex{r, 0.0}) < 1e-15);
        CHECK(std::abs(entry_of(f, 1, 1) - Complex{-r, 0.0}) < 1e-15);
    }

    SUBCASE("column 0 is the uniform superposition") {
        for (int d : {2, 3, 4, 7}) {
            const Matrix f = fourier(d);
            for (int j = 0; j < d; ++j) {
                CHECK(std::abs(entry_of(f, j, 0) -
                               Complex{1.0 / std::sqrt(double(d)), 0.0}) <
                      1e-15);
            }
        }
    }

    SUBCASE("conjugation turns the phase gate into the shift gate") {
        for (int d = 2; d <= 16; ++d) {
            const Matrix lhs = multiply(
                fourier_inverse(d), multiply(pauli_z(d, 1), fourier(d)));
            CHECK(max_abs_diff(lhs, pauli_x(d, 1)) < 1e-10);
        }
    }

    SUBCASE("unitary for every supported dimension") {
        for (int d = 2; d <= 16; ++d) {
            CHECK(unitarity_residual(fourier(d)) < 1e-10);
        }
    }
}

TEST_CASE("controlled gate applies U^s on the port register") {
    SUBCASE("controlled shift on qutrits: |1>|1> -> |1>|2>") {
        const Matrix cx = controlled(pauli_x(3, 1), 3);
        const JointState out = apply(cx, JointState::basis(3, 3, 1, 1));
        CHECK(out.basis_pair().value() == std::pair<int, int>{1, 2});
    }

    SUBCASE("controlled phase puts omega^{sk} on |s>|k>") {
        for (int d : {2, 3, 5}) {
            const Matrix cz = controlled(pauli_z(d, 1), d);
            for (int s = 0; s < d; ++s) {
                for (int k = 0; k < d; ++k) {
                    const int idx = JointState::index(s, k, d);
                    CHECK(std::abs(cz(idx, idx) -
                                   root_of_unity(d, s * k)) < 1e-14);
                }
            }
        }
    }

    SUBCASE("control value 0 acts as the identity") {
        std::mt19937_64 rng(5150);
        const Matrix u = testutil::random_unitary(4, rng);
        const Matrix cu = controlled(u, 4);
        for (int k = 0; k < 4; ++k) {
            const JointState out = apply(cu, JointState::basis(4, 4, 0, k));
            CHECK(std::abs(out.amplitude(0, k) - Complex{1.0, 0.0}) < 1e-12);
        }
    }

    SUBCASE("block s equals U^s") {
        std::mt19937_64 rng(77);
        const int d = 3;
        const Matrix u = testutil::random_unitary(d, rng);
        const Matrix cu = controlled(u, d);
        Matrix power = Matrix::identity(d);
        for (int s = 0; s < d; ++s) {
            if (s > 0) power = multiply(power, u);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    CHECK(std::abs(cu(s * d + i, s * d + j) - power(i, j)) <
                          1e-12);
                }
            }
        }
    }

    CHECK_THROWS_AS(controlled(Matrix::identity(3), 4),
                    DimensionMismatchError);
}

TEST_CASE("port-controlled inverse shift") {
    SUBCASE("|1>|1> -> |0>|1> at D=3") {
        const Matrix g = port_controlled_x_dagger(3);
        const JointState out = apply(g, JointState::basis(3, 3, 1, 1));
        CHECK(out.basis_pair().value() == std::pair<int, int>{0, 1});
    }

    SUBCASE("flips the qubit entering port 1") {
        const Matrix g = port_controlled_x_dagger(2);
        const JointState out = apply(g, JointState::basis(2, 2, 0, 1));
        CHECK(out.basis_pair().value() == std::pair<int, int>{1, 1});
    }

    SUBCASE("port 0 leaves every state alone") {
        for (int d : {2, 3, 4, 6}) {
            const Matrix g = port_controlled_x_dagger(d);
            for (int s = 0; s < d; ++s) {
                const JointState out = apply(g, JointState::basis(d, d, s, 0));
                CHECK(out.basis_pair().value() == std::pair<int, int>{s, 0});
            }
        }
    }

    SUBCASE("is a permutation matrix") {
        for (int d = 2; d <= 8; ++d) {
            const Matrix g = port_controlled_x_dagger(d);
            const int n = g.dim();
            for (int i = 0; i < n; ++i) {
                int nonzero_in_row = 0;
                int nonzero_in_col = 0;
                for (int j = 0; j < n; ++j) {
                    if (std::abs(g(i, j)) > 1e-12) {
                        ++nonzero_in_row;
                        CHECK(std::abs(std::abs(g(i, j)) - 1.0) < 1e-12);
                    }
                    if (std::abs(g(j, i)) > 1e-12) ++nonzero_in_col;
                }
                CHECK(nonzero_in_row == 1);
                CHECK(nonzero_in_col == 1);
            }
        }
    }
}

TEST_CASE("gate catalog stays unitary across dimensions") {
    for (int d = 2; d <= 16; ++d) {
        CHECK(unitarity_residual(pauli_x(d, 1)) < 1e-10);
        CHECK(unitarity_residual(pauli_x(d, -1)) < 1e-10);
        CHECK(unitarity_residual(pauli_z(d, 1)) < 1e-10);
        CHECK(unitarity_residual(fourier(d)) < 1e-10);
        CHECK(unitarity_residual(controlled(pauli_x(d, 1), d)) < 1e-10);
        CHECK(unitarity_residual(controlled(pauli_z(d, 1), d)) < 1e-10);
        CHECK(unitarity_residual(port_controlled_x_dagger(d)) < 1e-10);
    }
}

TEST_CASE("gate specs") {
    SUBCASE("powers normalize modulo the dimension") {
        GateSpec spec{GateKind::PauliX, 4, -1};
        CHECK(spec.normalized_power() == 3);
        CHECK(max_abs_diff(spec.build(), pauli_x(4, 3)) == 0.0);
    }

    SUBCASE("labels name the gate") {
        CHECK(GateSpec{GateKind::PauliX, 4, 3}.label() == "X4^dagger");
        CHECK(GateSpec{GateKind::PauliX, 4, 2}.label() == "X4^2");
        CHECK(GateSpec{GateKind::PauliX, 4, 1}.label() == "X4");
        CHECK(GateSpec{GateKind::Fourier, 4}.label() == "F4");
        CHECK(GateSpec{GateKind::ControlledX, 3, 1}.label() == "C(X3)");
    }
}
