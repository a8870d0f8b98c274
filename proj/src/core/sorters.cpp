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

#include "core/sorters.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/state.hpp"

namespace qds::sorters {

namespace {

void validate_dim(int dim) {
    if (dim < 2 || dim > kMaxQuditDimension) {
        throw InvalidArgumentError("sorter dimension must lie in [2, " +
                                   std::to_string(kMaxQuditDimension) +
                                   "], got " + std::to_string(dim));
    }
}

std::string input_name(int s, int k) {
    return "(s=" + std::to_string(s) + ", k=" + std::to_string(k) + ")";
}

}  // namespace

Matrix build_sqs(int dim) {
    validate_dim(dim);
    return gates::controlled(gates::pauli_x(dim, 1), dim);
}

Matrix build_mqs(int dim) {
    validate_dim(dim);
    // (s, k) -> (s (-) k, s) is a bijection on basis labels, so the matrix is
    // a permutation.
    Matrix m(dim * dim);
    for (int s = 0; s < dim; ++s) {
        for (int k = 0; k < dim; ++k) {
            const int out_s = (s - k + dim) % dim;
            m(JointState::index(out_s, s, dim), JointState::index(s, k, dim)) =
                Complex{1.0, 0.0};
        }
    }
    require_unitary(m, kDefaultTolerance, "build_mqs");
    return m;
}

Matrix build_mqs_via_sqs(int dim) {
    validate_dim(dim);
    Matrix m = multiply(build_sqs(dim), gates::port_controlled_x_dagger(dim));
    require_unitary(m, kDefaultTolerance, "build_mqs_via_sqs");
    return m;
}

const char* to_string(SorterClass c) {
    switch (c) {
        case SorterClass::Perfect:
            return "perfect";
        case SorterClass::SingleInputPort:
            return "single_input_port";
        case SorterClass::MultiInputPort:
            return "multi_input_port";
        case SorterClass::GeneralSorter:
            return "general_sorter";
        case SorterClass::NotASorter:
            return "not_a_sorter";
        case SorterClass::NotUnitary:
            return "not_unitary";
    }
    return "?";
}

CandidateMapping::CandidateMapping(int dim) : dim_(dim) {
    validate_dim(dim);
    const std::size_t n = static_cast<std::size_t>(dim) * dim;
    images_.assign(n, {});
    assigned_.assign(n, false);
}

CandidateMapping CandidateMapping::from_matrix(const Matrix& u, int dim) {
    validate_dim(dim);
    if (u.dim() != dim * dim) {
        throw DimensionMismatchError(
            "CandidateMapping::from_matrix: matrix dimension " +
            std::to_string(u.dim()) + " is not dim^2 = " +
            std::to_string(dim * dim));
    }
    CandidateMapping mapping(dim);
    const int n = u.dim();
    for (int s = 0; s < dim; ++s) {
        for (int k = 0; k < dim; ++k) {
            const int col = JointState::index(s, k, dim);
            std::vector<Complex> image(static_cast<std::size_t>(n));
            for (int row = 0; row < n; ++row) {
                image[static_cast<std::size_t>(row)] = u(row, col);
            }
            mapping.set_image(s, k, std::move(image));
        }
    }
    return mapping;
}

void CandidateMapping::set_image(int s, int k, std::vector<Complex> image) {
    if (s < 0 || s >= dim_ || k < 0 || k >= dim_) {
        throw InvalidArgumentError("set_image: input label " + input_name(s, k) +
                                   " out of range");
    }
    if (image.size() != static_cast<std::size_t>(dim_) * dim_) {
        throw MalformedMappingError("set_image: image for " + input_name(s, k) +
                                    " must have length dim^2");
    }
    for (const Complex& a : image) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw MalformedMappingError("set_image: image for " +
                                        input_name(s, k) +
                                        " has non-finite entries");
        }
    }
    const std::size_t idx =
        static_cast<std::size_t>(JointState::index(s, k, dim_));
    images_[idx] = std::move(image);
    assigned_[idx] = true;
}

bool CandidateMapping::has_image(int s, int k) const {
    return assigned_[static_cast<std::size_t>(JointState::index(s, k, dim_))];
}

const std::vector<Complex>& CandidateMapping::image(int s, int k) const {
    const std::size_t idx =
        static_cast<std::size_t>(JointState::index(s, k, dim_));
    if (!assigned_[idx]) {
        throw MalformedMappingError("image for " + input_name(s, k) +
                                    " was never assigned");
    }
    return images_[idx];
}

bool CandidateMapping::complete() const {
    for (bool b : assigned_) {
        if (!b) return false;
    }
    return true;
}

SorterReport classify(const CandidateMapping& mapping, double tol) {
    validate_tolerance(tol);
    const int dim = mapping.dim();
    const int n_inputs = dim * dim;

    for (int s = 0; s < dim; ++s) {
        for (int k = 0; k < dim; ++k) {
            if (!mapping.has_image(s, k)) {
                throw MalformedMappingError("mapping is incomplete: no image for " +
                                            input_name(s, k));
            }
            double norm2 = 0.0;
            for (const Complex& a : mapping.image(s, k)) norm2 += std::norm(a);
            if (std::abs(norm2 - 1.0) > tol) {
                throw MalformedMappingError(
                    "image of " + input_name(s, k) + " has squared norm " +
                    std::to_string(norm2) + ", expected 1");
            }
        }
    }

    SorterReport report;

    // Pairwise orthogonality of the images. A table of D^2 orthonormal
    // vectors extends to a unitary; any overlapping pair is a proof that no
    // unitary realizes the mapping.
    auto input_of = [dim](int flat) {
        return BasisInput{flat / dim, flat % dim};
    };
    auto image_of = [&](int flat) -> const std::vector<Complex>& {
        return mapping.image(flat / dim, flat % dim);
    };
    report.is_unitary = true;
    for (int i = 0; i < n_inputs; ++i) {
        for (int j = i + 1; j < n_inputs; ++j) {
            const std::vector<Complex>& a = image_of(i);
            const std::vector<Complex>& b = image_of(j);
            Complex overlap{0.0, 0.0};
            for (std::size_t t = 0; t < a.size(); ++t) {
                overlap += std::conj(a[t]) * b[t];
            }
            const double mag = std::abs(overlap);
            if (mag > report.max_gram_residual) report.max_gram_residual = mag;
            if (mag > tol && report.is_unitary) {
                report.is_unitary = false;
                report.witness =
                    CollisionWitness{input_of(i), input_of(j), overlap};
            }
        }
    }

    // Port scan: port k qualifies when, for every s, the image of |s>|k>
    // carries all of its weight in port column s. The system factor may be an
    // arbitrary superposition.
    bool system_preserved = true;
    for (int k = 0; k < dim; ++k) {
        bool port_ok = true;
        for (int s = 0; s < dim; ++s) {
            const std::vector<Complex>& img = mapping.image(s, k);
            std::vector<double> port_weight(static_cast<std::size_t>(dim), 0.0);
            for (int t = 0; t < dim; ++t) {
                for (int p = 0; p < dim; ++p) {
                    port_weight[static_cast<std::size_t>(p)] +=
                        std::norm(img[static_cast<std::size_t>(
                            JointState::index(t, p, dim))]);
                }
            }
            int deterministic_ports = 0;
            for (double w : port_weight) {
                if (w >= 1.0 - tol) ++deterministic_ports;
            }
            if (deterministic_ports > 1) {
                // Unreachable for normalized images at tol < 1/2.
                throw MalformedMappingError(
                    "image of " + input_name(s, k) +
                    " is within tolerance of two distinct output ports");
            }
            if (std::abs(port_weight[static_cast<std::size_t>(s)] - 1.0) > tol) {
                port_ok = false;
            }
            if (std::norm(img[static_cast<std::size_t>(
                    JointState::index(s, s, dim))]) < 1.0 - tol) {
                system_preserved = false;
            }
        }
        if (port_ok) report.sorting_ports.push_back(k);
    }

    if (!report.is_unitary) {
        report.classification = SorterClass::NotUnitary;
    } else if (report.sorting_ports.size() == static_cast<std::size_t>(dim)) {
        report.classification = system_preserved ? SorterClass::Perfect
                                                 : SorterClass::MultiInputPort;
    } else if (report.sorting_ports.size() == 1 &&
               report.sorting_ports.front() == 0) {
        report.classification = SorterClass::SingleInputPort;
    } else if (!report.sorting_ports.empty()) {
        report.classification = SorterClass::GeneralSorter;
    } else {
        report.classification = SorterClass::NotASorter;
    }
    return report;
}

SorterReport attempt_perfect_sorter(int dim) {
    validate_dim(dim);
    CandidateMapping mapping(dim);
    const std::size_t n = static_cast<std::size_t>(dim) * dim;
    for (int s = 0; s < dim; ++s) {
        for (int k = 0; k < dim; ++k) {
            std::vector<Complex> image(n, Complex{0.0, 0.0});
            image[static_cast<std::size_t>(JointState::index(s, s, dim))] =
                Complex{1.0, 0.0};
            mapping.set_image(s, k, std::move(image));
        }
    }
    return classify(mapping);
}

}  // namespace qds::sorters
