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
#include "core/matrix.hpp"
#include "core/state.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace qds;

TEST_CASE("tensor product follows the system-major index convention") {
    const Matrix i2 = Matrix::identity(2);

    SUBCASE("identity (x) identity") {
        CHECK(max_abs_diff(tensor_product(i2, i2), Matrix::identity(4)) == 0.0);
    }

    SUBCASE("X (x) I moves the system factor only") {
        // index(0,1) -> index(1,1) for d_port = 2
        const Matrix m = tensor_product(gates::pauli_x(2, 1), i2);
        const JointState out = apply(m, JointState::basis(2, 2, 0, 1));
        CHECK(std::abs(out.amplitude(1, 1) - Complex{1.0, 0.0}) < 1e-15);
    }

    SUBCASE("inverse shift (x) I on |1>|1>") {
        const Matrix m = tensor_product(gates::pauli_x(3, -1),
                                        Matrix::identity(3));
        const JointState out = apply(m, JointState::basis(3, 3, 1, 1));
        CHECK(std::abs(out.amplitude(0, 1) - Complex{1.0, 0.0}) < 1e-15);
    }

    SUBCASE("dimension multiplies") {
        CHECK(tensor_product(Matrix::identity(3), Matrix::identity(4)).dim() ==
              12);
    }
}

TEST_CASE("tensor product is associative on random unitaries") {
    std::mt19937_64 rng(7041);
    for (int trial = 0; trial < 8; ++trial) {
        const Matrix a = testutil::random_unitary(2 + trial % 3, rng);
        const Matrix b = testutil::random_unitary(2 + (trial + 1) % 3, rng);
        const Matrix c = testutil::random_unitary(2 + (trial + 2) % 3, rng);
        CHECK(max_abs_diff(tensor_product(tensor_product(a, b), c),
                           tensor_product(a, tensor_product(b, c))) < 1e-12);
    }
}

TEST_CASE("apply preserves the norm and checks dimensions") {
    std::mt19937_64 rng(99);
    for (int d : {2, 3, 5}) {
        const Matrix u = testutil::random_unitary(d * d, rng);
        const JointState psi(d, d, testutil::random_state(d * d, rng));
        const JointState out = apply(u, psi);
        CHECK(std::abs(out.squared_norm() - 1.0) < 1e-10);
    }
    CHECK(max_abs_diff(Matrix::identity(4), Matrix::identity(4)) == 0.0);

    const JointState psi = JointState::basis(2, 2, 0, 0);
    CHECK_THROWS_AS(apply(Matrix::identity(9), psi), DimensionMismatchError);
}

TEST_CASE("identity leaves any state unchanged") {
    std::mt19937_64 rng(1234);
    const JointState psi(3, 3, testutil::random_state(9, rng));
    const JointState out = apply(Matrix::identity(9), psi);
    for (int i = 0; i < 9; ++i) {
        CHECK(std::abs(out.amplitudes()[i] - psi.amplitudes()[i]) < 1e-15);
    }
}

TEST_CASE("global-phase comparison") {
    std::mt19937_64 rng(4242);

    SUBCASE("reflexive") {
        const Matrix a = testutil::random_unitary(4, rng);
        CHECK(equal_up_to_global_phase(a, a));
    }

    SUBCASE("phase-shifted copy matches") {
        const Matrix a = testutil::random_unitary(3, rng);
        const Matrix b = scale(a, std::polar(1.0, std::numbers::pi / 7));
        CHECK(equal_up_to_global_phase(a, b));
    }

    SUBCASE("shift vs phase gate differ at every phase") {
        const Matrix x = gates::pauli_x(2, 1);
        const Matrix z = gates::pauli_z(2, 1);
        // Oracle: dense phase-grid scan stays far from zero.
        CHECK(testutil::min_phase_distance_grid(x, z) > 0.9);
        CHECK_FALSE(equal_up_to_global_phase(x, z));
    }

    SUBCASE("symmetric and invariant under unit scalars") {
        for (int trial = 0; trial < 6; ++trial) {
            const Matrix a = testutil::random_unitary(2 + trial % 3, rng);
            std::uniform_real_distribution<double> angle(0.0,
                                                         2 * std::numbers::pi);
            const Matrix b = scale(a, std::polar(1.0, angle(rng)));
            CHECK(equal_up_to_global_phase(a, b));
            CHECK(equal_up_to_global_phase(b, a));
            const Matrix c = scale(b, std::polar(1.0, angle(rng)));
            CHECK(equal_up_to_global_phase(a, c));
        }
    }

    SUBCASE("distinct unitaries stay distinct") {
        const Matrix a = testutil::random_unitary(4, rng);
        const Matrix b = testutil::random_unitary(4, rng);
        const double oracle = testutil::min_phase_distance_grid(a, b, 720);
        if (oracle > 1e-6) {
            CHECK_FALSE(equal_up_to_global_phase(a, b));
        }
    }

    SUBCASE("dimension mismatch throws") {
        CHECK_THROWS_AS(equal_up_to_global_phase(Matrix::identity(2),
                                                 Matrix::identity(3)),
                        DimensionMismatchError);
    }
}

TEST_CASE("unitarity check") {
    CHECK(is_unitary(Matrix::identity(4)));
    CHECK(is_unitary(gates::fourier(5)));
    CHECK_FALSE(is_unitary(scale(Matrix::identity(2), Complex{2.0, 0.0})));

    SUBCASE("non-finite entries are never unitary") {
        Matrix m = Matrix::identity(2);
        m(0, 0) = Complex{std::nan(""), 0.0};
        CHECK_FALSE(is_unitary(m));
    }

    SUBCASE("tolerance bounds") {
        CHECK_THROWS_AS(is_unitary(Matrix::identity(2), 1e-5),
                        InvalidArgumentError);
        CHECK_THROWS_AS(is_unitary(Matrix::identity(2), 0.0),
                        InvalidArgumentError);
        CHECK_THROWS_AS(validate_tolerance(-1.0), InvalidArgumentError);
    }
}

TEST_CASE("joint state invariants") {
    SUBCASE("norm must be 1") {
        std::vector<Complex> bad(4, Complex{0.5, 0.5});  // norm^2 = 2
        CHECK_THROWS_AS(JointState(2, 2, bad), InvalidArgumentError);
    }

    SUBCASE("amplitudes must be finite") {
        std::vector<Complex> bad(4, Complex{0.0, 0.0});
        bad[0] = Complex{std::numeric_limits<double>::infinity(), 0.0};
        CHECK_THROWS_AS(JointState(2, 2, bad), InvalidArgumentError);
    }

    SUBCASE("length must be d_system * d_port") {
        std::vector<Complex> bad(3, Complex{0.0, 0.0});
        CHECK_THROWS_AS(JointState(2, 2, bad), DimensionMismatchError);
    }

    SUBCASE("index convention is system-major") {
        CHECK(JointState::index(1, 2, 4) == 6);
        const JointState psi = JointState::basis(3, 4, 1, 2);
        CHECK(std::abs(psi.amplitudes()[6] - Complex{1.0, 0.0}) < 1e-15);
        CHECK(psi.basis_pair().value() == std::pair<int, int>{1, 2});
    }

    SUBCASE("port probabilities sum basis weights") {
        const double r = 1.0 / std::sqrt(2.0);
        std::vector<Complex> amps(4, Complex{0.0, 0.0});
        amps[JointState::index(0, 1, 2)] = Complex{r, 0.0};
        amps[JointState::index(1, 0, 2)] = Complex{0.0, r};
        const JointState psi(2, 2, amps);
        const auto p = psi.port_probabilities();
        CHECK(p[0] == doctest::Approx(0.5));
        CHECK(p[1] == doctest::Approx(0.5));
        CHECK_FALSE(psi.basis_pair().has_value());
    }
}

TEST_CASE("matrix guards") {
    CHECK_THROWS_AS(Matrix(0), InvalidArgumentError);
    CHECK_THROWS_AS(multiply(Matrix::identity(2), Matrix::identity(3)),
                    DimensionMismatchError);
    CHECK_THROWS_AS(require_unitary(scale(Matrix::identity(2), 2.0),
                                    kDefaultTolerance, "test"),
                    NotUnitaryError);
}
