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

#include "core/simulation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "core/errors.hpp"
#include "core/state.hpp"

namespace qds::sim {

namespace {

// Stateless per-index generator (splitmix64 finalizer). One draw per
// (particle, shot) stream keeps sampling order-independent and byte-stable
// across platforms, which std::uniform_real_distribution does not guarantee.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

int draw_categorical(const std::vector<double>& weights, double u) {
    double cumulative = 0.0;
    const int n = static_cast<int>(weights.size());
    for (int i = 0; i < n; ++i) {
        cumulative += weights[static_cast<std::size_t>(i)];
        if (u < cumulative) return i;
    }
    return n - 1;  // guard against rounding in the tail
}

void validate_sorter(const Matrix& sorter, int dim) {
    if (dim < 2 || dim > kMaxQuditDimension) {
        throw InvalidArgumentError("simulation dimension must lie in [2, " +
                                   std::to_string(kMaxQuditDimension) + "]");
    }
    if (sorter.dim() != dim * dim) {
        throw DimensionMismatchError("sorter must act on the joint space: "
                                     "expected dimension " +
                                     std::to_string(dim * dim) + ", got " +
                                     std::to_string(sorter.dim()));
    }
}

JointState inject(const Particle& particle, int dim) {
    std::vector<Complex> amps(static_cast<std::size_t>(dim) * dim,
                              Complex{0.0, 0.0});
    for (int s = 0; s < dim; ++s) {
        amps[static_cast<std::size_t>(
            JointState::index(s, particle.input_port, dim))] =
            particle.amplitudes[static_cast<std::size_t>(s)];
    }
    return JointState(dim, dim, std::move(amps));
}

}  // namespace

Particle::Particle(std::vector<Complex> amps, int port)
    : amplitudes(std::move(amps)), input_port(port) {
    if (amplitudes.size() < 2) {
        throw InvalidArgumentError("Particle: need at least 2 amplitudes");
    }
    if (input_port < 0 || input_port >= dim()) {
        throw InvalidArgumentError("Particle: input port " +
                                   std::to_string(input_port) +
                                   " out of range for dimension " +
                                   std::to_string(dim()));
    }
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvalidArgumentError("Particle: amplitudes must be finite");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kDefaultTolerance) {
        throw InvalidArgumentError("Particle: squared norm " +
                                   std::to_string(norm2) +
                                   " is not 1 within tolerance");
    }
}

Particle Particle::basis(int dim, int state, int port) {
    if (dim < 2 || state < 0 || state >= dim) {
        throw InvalidArgumentError("Particle::basis: state out of range");
    }
    std::vector<Complex> amps(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    amps[static_cast<std::size_t>(state)] = Complex{1.0, 0.0};
    return Particle(std::move(amps), port);
}

std::optional<int> Particle::basis_state(double threshold) const {
    for (int s = 0; s < dim(); ++s) {
        if (std::norm(amplitudes[static_cast<std::size_t>(s)]) >=
            1.0 - threshold) {
            return s;
        }
    }
    return std::nullopt;
}

std::vector<SortOutcomeRecord> sort_deterministic(
    const std::vector<Particle>& particles, const Matrix& sorter, int dim) {
    validate_sorter(sorter, dim);
    std::vector<SortOutcomeRecord> records;
    records.reserve(particles.size());
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const Particle& particle = particles[i];
        if (particle.dim() != dim) {
            throw DimensionMismatchError("particle " + std::to_string(i) +
                                         " has dimension " +
                                         std::to_string(particle.dim()));
        }
        if (!particle.basis_state()) {
            throw NotBasisStateError(
                "particle " + std::to_string(i) +
                " is not a basis state; use sampling for superpositions");
        }
        const JointState out = apply(sorter, inject(particle, dim));
        const auto pair = out.basis_pair();
        if (!pair) {
            throw NotBasisStateError(
                "sorter image of particle " + std::to_string(i) +
                " is not a basis state; use sampling instead");
        }
        records.push_back(SortOutcomeRecord{static_cast<int>(i), pair->second,
                                            pair->first});
    }
    return records;
}

ClickHistogram sample_clicks(const std::vector<Particle>& particles,
                             const Matrix& sorter, int dim, long long shots,
                             std::uint64_t seed) {
    validate_sorter(sorter, dim);
    if (shots < 1) {
        throw InvalidArgumentError("shots must be at least 1");
    }
    ClickHistogram histogram;
    histogram.dim = dim;
    histogram.counts.assign(static_cast<std::size_t>(dim), 0);
    histogram.shots_per_particle = shots;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        if (particles[i].dim() != dim) {
            throw DimensionMismatchError("particle " + std::to_string(i) +
                                         " has dimension " +
                                         std::to_string(particles[i].dim()));
        }
        const JointState out = apply(sorter, inject(particles[i], dim));
        const std::vector<double> p = out.port_probabilities();
        const std::uint64_t base =
            seed + static_cast<std::uint64_t>(i) *
                       static_cast<std::uint64_t>(shots);
        for (long long shot = 0; shot < shots; ++shot) {
            const double u =
                uniform01(mix64(base + static_cast<std::uint64_t>(shot)));
            ++histogram.counts[static_cast<std::size_t>(draw_categorical(p, u))];
        }
    }
    histogram.total =
        static_cast<long long>(particles.size()) * shots;
    return histogram;
}

std::vector<long long> sample_clicks_joint(
    const std::vector<Particle>& particles, const Matrix& sorter, int dim,
    long long shots, std::uint64_t seed) {
    validate_sorter(sorter, dim);
    if (shots < 1) {
        throw InvalidArgumentError("shots must be at least 1");
    }
    std::vector<long long> counts(static_cast<std::size_t>(dim) * dim, 0);
    for (std::size_t i = 0; i < particles.size(); ++i) {
        if (particles[i].dim() != dim) {
            throw DimensionMismatchError("particle " + std::to_string(i) +
                                         " has dimension " +
                                         std::to_string(particles[i].dim()));
        }
        const JointState out = apply(sorter, inject(particles[i], dim));
        std::vector<double> p;
        p.reserve(out.amplitudes().size());
        for (const Complex& a : out.amplitudes()) p.push_back(std::norm(a));
        const std::uint64_t base =
            seed + static_cast<std::uint64_t>(i) *
                       static_cast<std::uint64_t>(shots);
        for (long long shot = 0; shot < shots; ++shot) {
            const double u =
                uniform01(mix64(base + static_cast<std::uint64_t>(shot)));
            ++counts[static_cast<std::size_t>(draw_categorical(p, u))];
        }
    }
    return counts;
}

std::vector<double> infer_input_histogram(const ClickHistogram& histogram) {
    if (histogram.shots_per_particle < 1) {
        throw InvalidArgumentError(
            "infer_input_histogram: shots_per_particle must be at least 1");
    }
    std::vector<double> inferred;
    inferred.reserve(histogram.counts.size());
    for (long long c : histogram.counts) {
        inferred.push_back(static_cast<double>(c) /
                           static_cast<double>(histogram.shots_per_particle));
    }
    return inferred;
}

}  // namespace qds::sim
