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

#include <cassert>
#include <complex>
#include <vector>

namespace qds {

using Complex = std::complex<double>;

/// Tolerance used by every check unless the caller overrides it.
inline constexpr double kDefaultTolerance = 1e-10;

/// Loosest tolerance any check accepts.
inline constexpr double kLoosestTolerance = 1e-6;

/// An amplitude is "the" basis component when its squared modulus reaches
/// 1 - kBasisStateThreshold.
inline constexpr double kBasisStateThreshold = 1e-9;

/// Hard cap on the quDit dimension D. Joint-space matrices are dense D^2 x D^2
/// grids, so this bounds memory and construction cost.
inline constexpr int kMaxQuditDimension = 64;

/// Dense complex square matrix, row-major storage.
///
/// The class itself places no algebraic constraints on its entries; gate and
/// sorter builders verify unitarity before handing a Matrix out.
class Matrix {
public:
    Matrix() = default;

    /// Zero matrix of the given dimension.
    explicit Matrix(int dim);

    static Matrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int row, int col) {
        assert(row >= 0 && row < dim_ && col >= 0 && col < dim_);
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }

    const Complex& operator()(int row, int col) const {
        assert(row >= 0 && row < dim_ && col >= 0 && col < dim_);
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    /// True when no entry is NaN or infinite.
    bool finite() const;

private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

/// Matrix product a * b. Throws DimensionMismatchError on unequal dimensions.
Matrix multiply(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix adjoint(const Matrix& m);

/// Kronecker product. Row/column blocks follow the first factor, so for a
/// system (x) port product the joint index is s * b.dim() + k.
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Entrywise scalar multiple.
Matrix scale(const Matrix& m, Complex factor);

/// Maximum entrywise |a - b|. Throws DimensionMismatchError on unequal dims.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Maximum entrywise |m^dagger m - I|; +infinity if any entry is non-finite.
double unitarity_residual(const Matrix& m);

/// True iff unitarity_residual(m) <= tol.
bool is_unitary(const Matrix& m, double tol = kDefaultTolerance);

/// Throws NotUnitaryError naming `what` when the residual exceeds tol.
void require_unitary(const Matrix& m, double tol, const char* what);

/// Throws InvalidArgumentError unless 0 < tol <= kLoosestTolerance.
void validate_tolerance(double tol);

/// Result of a global-phase-insensitive comparison.
struct PhaseComparison {
    bool equal = false;
    double residual = 0.0;  ///< max-entry |a - phase * b| at the aligning phase
    Complex phase{1.0, 0.0};  ///< unit scalar such that a ~ phase * b
};

/// Compares a and b up to a global phase. The aligning phase comes from the
/// phase of trace(a^dagger b); when that trace is smaller than tol in modulus
/// the phase of the largest-magnitude entry of a^dagger b is used instead.
PhaseComparison compare_up_to_global_phase(const Matrix& a, const Matrix& b,
                                           double tol = kDefaultTolerance);

bool equal_up_to_global_phase(const Matrix& a, const Matrix& b,
                              double tol = kDefaultTolerance);

/// Residual of the phase-aligned comparison, irrespective of any tolerance.
double phase_distance(const Matrix& a, const Matrix& b);

}  // namespace qds
