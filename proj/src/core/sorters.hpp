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

#include <optional>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace qds::sorters {

/// Single-input-port quantum sorter: |s>|k> -> |s>|s (+) k>. Sends a particle
/// in state |s> to output port |s| only when it enters on port 0.
Matrix build_sqs(int dim);

/// Multi-input-port quantum sorter: |s>|k> -> |s (-) k>|s>. Sends a particle
/// in state |s> to output port |s> regardless of the input port, at the price
/// of shifting the system state.
Matrix build_mqs(int dim);

/// Builds the MQS from its factorization U_MQS = U_SQS * PC(X^dagger): the
/// port-controlled inverse shift followed by the single-input-port sorter.
/// Equals build_mqs(dim) entrywise.
Matrix build_mqs_via_sqs(int dim);

enum class SorterClass {
    Perfect,          ///< sorts on every port and preserves the system state
    SingleInputPort,  ///< sorts only on input port 0
    MultiInputPort,   ///< sorts on every port, system state altered
    GeneralSorter,    ///< sorts on a nonempty strict subset of ports
    NotASorter,       ///< sorts on no port
    NotUnitary,       ///< mapping admits no unitary extension
};

const char* to_string(SorterClass c);

struct BasisInput {
    int state = 0;
    int port = 0;
};

/// Two basis inputs whose images are not orthogonal; proof that the mapping
/// admits no unitary extension.
struct CollisionWitness {
    BasisInput first;
    BasisInput second;
    Complex overlap{0.0, 0.0};
};

/// Table of basis-input images on the joint space: one output vector of
/// length dim^2 per input |s>|k>. Images need not be normalized at
/// construction time; classify() validates them.
class CandidateMapping {
public:
    explicit CandidateMapping(int dim);

    /// Columns of u become the images of the dim^2 basis inputs.
    static CandidateMapping from_matrix(const Matrix& u, int dim);

    int dim() const { return dim_; }

    /// Sets the image of |s>|k>; the vector must have length dim^2 and only
    /// finite entries.
    void set_image(int s, int k, std::vector<Complex> image);

    bool has_image(int s, int k) const;
    const std::vector<Complex>& image(int s, int k) const;

    /// True when all dim^2 images are assigned.
    bool complete() const;

private:
    int dim_ = 0;
    std::vector<std::vector<Complex>> images_;
    std::vector<bool> assigned_;
};

/// Classification verdict for a candidate mapping.
struct SorterReport {
    bool is_unitary = false;
    /// Ports k on which every |s>|k> exits through port |s>.
    std::vector<int> sorting_ports;
    SorterClass classification = SorterClass::NotASorter;
    std::optional<CollisionWitness> witness;
    /// Largest deviation of the image Gram matrix from the identity.
    double max_gram_residual = 0.0;
};

/// Classifies a mapping: first checks that the images are pairwise
/// orthonormal (a unitary extension exists), then scans each input port for
/// the sorting condition "state |s> exits through port |s>", and names the
/// class. The system factor of an image may be any normalized superposition;
/// only the port factor must be the deterministic basis state |s>.
/// Throws MalformedMappingError for missing or non-normalized images.
SorterReport classify(const CandidateMapping& mapping,
                      double tol = kDefaultTolerance);

/// Builds the would-be perfect sorter table |s>|k> -> |s>|s> and classifies
/// it. For every dim >= 2 the verdict is NotUnitary with a collision witness:
/// two distinct ports feeding the same state map to the same image.
SorterReport attempt_perfect_sorter(int dim);

}  // namespace qds::sorters
