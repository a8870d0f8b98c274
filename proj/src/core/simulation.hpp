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

#include <cstdint>
#include <optional>
#include <vector>

#include "core/matrix.hpp"

namespace qds::sim {

/// One incident quDit: its system-state amplitudes and the input port it
/// enters on. Particles are distinguishable and non-interacting; every
/// particle evolves through the same single-particle sorter independently.
struct Particle {
    std::vector<Complex> amplitudes;  ///< length D, unit norm
    int input_port = 0;

    Particle(std::vector<Complex> amps, int port);

    /// Particle prepared in the basis state |state> on the given port.
    static Particle basis(int dim, int state, int port);

    int dim() const { return static_cast<int>(amplitudes.size()); }

    /// The basis label when exactly one amplitude carries (almost) all the
    /// weight, otherwise nullopt.
    std::optional<int> basis_state(
        double threshold = kBasisStateThreshold) const;
};

/// Deterministic outcome for one basis-state particle.
struct SortOutcomeRecord {
    int particle_index = 0;
    int output_port = 0;
    int output_system_state = 0;
};

/// Detector counts per output port.
struct ClickHistogram {
    int dim = 0;
    std::vector<long long> counts;  ///< length dim, indexed by output port
    long long shots_per_particle = 0;
    long long total = 0;  ///< = particles * shots_per_particle
};

/// Evolves each basis-state particle through the sorter and reads off the
/// resulting basis pair. The sorter must be a (dim^2)-dimensional unitary
/// mapping basis states to basis states (up to a phase); every built-in
/// sorter does. Throws NotBasisStateError for superposed particles.
std::vector<SortOutcomeRecord> sort_deterministic(
    const std::vector<Particle>& particles, const Matrix& sorter, int dim);

/// Evolves every particle through the sorter and samples the port register in
/// the computational basis with Born probabilities, shots times per particle.
/// Each (particle, shot) pair draws from its own stream derived as
/// seed + particle_index * shots + shot_index, so any evaluation order
/// reproduces the sequential result bit for bit.
ClickHistogram sample_clicks(const std::vector<Particle>& particles,
                             const Matrix& sorter, int dim, long long shots,
                             std::uint64_t seed);

/// Variant that measures the system register too: counts over the dim^2 joint
/// cells, flattened as system * dim + port.
std::vector<long long> sample_clicks_joint(
    const std::vector<Particle>& particles, const Matrix& sorter, int dim,
    long long shots, std::uint64_t seed);

/// Estimated number of particles initially in each system basis state:
/// counts divided by shots_per_particle.
std::vector<double> infer_input_histogram(const ClickHistogram& histogram);

}  // namespace qds::sim
