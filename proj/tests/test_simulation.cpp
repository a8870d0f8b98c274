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
#include <numeric>
#include <random>

#include "core/errors.hpp"
#include "core/photonic.hpp"
#include "core/simulation.hpp"
#include "core/sorters.hpp"
#include "core/state.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace qds;
using namespace qds::sim;

namespace {

std::vector<Complex> plus_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Complex{r, 0.0}, Complex{r, 0.0}};
}

}  // namespace

TEST_CASE("particle construction") {
    CHECK(Particle::basis(3, 2, 1).basis_state().value() == 2);
    CHECK_FALSE(Particle(plus_state(), 0).basis_state().has_value());
    CHECK_THROWS_AS(Particle::basis(3, 3, 0), InvalidArgumentError);
    CHECK_THROWS_AS(Particle::basis(3, 0, 3), InvalidArgumentError);
    CHECK_THROWS_AS(Particle({Complex{1.0, 0.0}, Complex{1.0, 0.0}}, 0),
                    InvalidArgumentError);  // norm^2 = 2
}

TEST_CASE("deterministic sorting") {
    SUBCASE("two identically polarized photons leave through one port") {
        const std::vector<Particle> photons{Particle::basis(2, 0, 0),
                                            Particle::basis(2, 0, 1)};
        const auto records = sort_deterministic(
            photons, photonic::build_polarization_sorter(), 2);
        REQUIRE(records.size() == 2);
        CHECK(records[0].output_port == 0);
        CHECK(records[1].output_port == 0);
        CHECK(records[0].output_system_state == 0);
        CHECK(records[1].output_system_state == 1);
    }

    SUBCASE("same-state qutrits split under the SQS but not the MQS") {
        const std::vector<Particle> qutrits{Particle::basis(3, 1, 0),
                                            Particle::basis(3, 1, 1)};
        const auto through_sqs =
            sort_deterministic(qutrits, sorters::build_sqs(3), 3);
        CHECK(through_sqs[0].output_port == 1);
        CHECK(through_sqs[1].output_port == 2);  // the single-port failure

        const auto through_mqs =
            sort_deterministic(qutrits, sorters::build_mqs(3), 3);
        CHECK(through_mqs[0].output_port == 1);
        CHECK(through_mqs[1].output_port == 1);
        CHECK(through_mqs[0].output_system_state == 1);
        CHECK(through_mqs[1].output_system_state == 0);
    }

    SUBCASE("port 0 of the SQS sorts any basis state") {
        for (int d : {2, 3, 4, 8}) {
            const Matrix sqs = sorters::build_sqs(d);
            for (int s = 0; s < d; ++s) {
                const auto records =
                    sort_deterministic({Particle::basis(d, s, 0)}, sqs, d);
                CHECK(records[0].output_port == s);
                CHECK(records[0].output_system_state == s);
            }
        }
    }

    SUBCASE("MQS output ports ignore the input port entirely") {
        for (int d : {2, 3, 5}) {
            const Matrix mqs = sorters::build_mqs(d);
            for (int s = 0; s < d; ++s) {
                std::vector<Particle> batch;
                for (int k = 0; k < d; ++k) {
                    batch.push_back(Particle::basis(d, s, k));
                }
                for (const auto& record : sort_deterministic(batch, mqs, d)) {
                    CHECK(record.output_port == s);
                }
            }
        }
    }

    SUBCASE("superposed particles are rejected") {
        const std::vector<Particle> batch{Particle(plus_state(), 0)};
        CHECK_THROWS_AS(
            sort_deterministic(batch, sorters::build_mqs(2), 2),
            NotBasisStateError);
    }

    SUBCASE("dimension mismatches are rejected") {
        const std::vector<Particle> batch{Particle::basis(2, 0, 0)};
        CHECK_THROWS_AS(sort_deterministic(batch, sorters::build_mqs(3), 3),
                        DimensionMismatchError);
        CHECK_THROWS_AS(sort_deterministic(batch, Matrix::identity(3), 2),
                        DimensionMismatchError);
    }
}

TEST_CASE("click sampling") {
    SUBCASE("identical inputs reproduce identical histograms") {
        const std::vector<Particle> batch{Particle(plus_state(), 0),
                                          Particle::basis(2, 1, 1)};
        const Matrix mqs = sorters::build_mqs(2);
        const ClickHistogram a = sample_clicks(batch, mqs, 2, 5000, 1234);
        const ClickHistogram b = sample_clicks(batch, mqs, 2, 5000, 1234);
        CHECK(a.counts == b.counts);
        const ClickHistogram c = sample_clicks(batch, mqs, 2, 5000, 1235);
        CHECK(a.counts != c.counts);  // a different seed shifts the draw
    }

    SUBCASE("basis particles click deterministically") {
        const ClickHistogram h = sample_clicks(
            {Particle::basis(4, 2, 3)}, sorters::build_mqs(4), 4, 100, 9);
        CHECK(h.counts[2] == 100);
        CHECK(h.total == 100);
    }

    SUBCASE("same-state particles all land in one port") {
        const int d = 5;
        const int s = 3;
        std::vector<Particle> batch;
        for (int k = 0; k < d; ++k) batch.push_back(Particle::basis(d, s, k));
        const ClickHistogram h =
            sample_clicks(batch, sorters::build_mqs(d), d, 1, 77);
        CHECK(h.counts[s] == d);
        CHECK(h.total == d);
    }

    SUBCASE("frequencies approach Born weights") {
        // 5 sigma bound per port at 1e5 shots, fixed seed.
        std::mt19937_64 rng(60221023);
        const long long shots = 100000;
        for (int d : {2, 3}) {
            const std::vector<Complex> amps = testutil::random_state(d, rng);
            const ClickHistogram h =
                sample_clicks({Particle(amps, 1 % d)}, sorters::build_mqs(d),
                              d, shots, 5151);
            for (int s = 0; s < d; ++s) {
                const double p = std::norm(amps[s]);
                const double freq =
                    static_cast<double>(h.counts[s]) / shots;
                const double bound =
                    5.0 * std::sqrt(p * (1.0 - p) / shots);
                CHECK(std::abs(freq - p) <= bound);
            }
        }
    }

    SUBCASE("histogram conserves every particle") {
        std::mt19937_64 rng(31337);
        const int d = 4;
        std::vector<Particle> batch;
        for (int i = 0; i < 6; ++i) {
            batch.push_back(Particle(testutil::random_state(d, rng), i % d));
        }
        const ClickHistogram h =
            sample_clicks(batch, sorters::build_mqs(d), d, 321, 8);
        CHECK(std::accumulate(h.counts.begin(), h.counts.end(), 0LL) ==
              h.total);
        CHECK(h.total == 6 * 321);
    }

    SUBCASE("joint sampling covers the full cell grid") {
        const int d = 2;
        const std::vector<Particle> batch{Particle(plus_state(), 1)};
        const std::vector<long long> joint = sample_clicks_joint(
            batch, sorters::build_mqs(d), d, 10000, 4242);
        CHECK(joint.size() == 4);
        CHECK(std::accumulate(joint.begin(), joint.end(), 0LL) == 10000);
        // |+> on port 1 under the MQS: cells (1,0) and (0,1) each at 1/2.
        CHECK(joint[JointState::index(1, 0, d)] +
                  joint[JointState::index(0, 1, d)] ==
              10000);
    }

    SUBCASE("shots must be positive") {
        CHECK_THROWS_AS(sample_clicks({Particle::basis(2, 0, 0)},
                                      sorters::build_mqs(2), 2, 0, 1),
                        InvalidArgumentError);
    }
}

TEST_CASE("input inference divides by shots") {
    SUBCASE("single-shot photon pair") {
        ClickHistogram h{2, {2, 0}, 1, 2};
        const std::vector<double> inferred = infer_input_histogram(h);
        CHECK(inferred[0] == doctest::Approx(2.0));
        CHECK(inferred[1] == doctest::Approx(0.0));
    }

    SUBCASE("all particles in one state") {
        ClickHistogram h{4, {0, 0, 42, 0}, 1, 42};
        CHECK(infer_input_histogram(h)[2] == doctest::Approx(42.0));
    }

    SUBCASE("balanced superposition at 10^4 shots") {
        ClickHistogram h{2, {5000, 5000}, 10000, 10000};
        const std::vector<double> inferred = infer_input_histogram(h);
        CHECK(inferred[0] == doctest::Approx(0.5));
        CHECK(inferred[1] == doctest::Approx(0.5));
    }
}
