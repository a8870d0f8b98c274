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

#include "core/matrix.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "core/errors.hpp"

namespace qds {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError(std::string(op) + ": dimensions " +
                                     std::to_string(a.dim()) + " and " +
                                     std::to_string(b.dim()) + " differ");
    }
}

}  // namespace

Matrix::Matrix(int dim) {
    if (dim < 1) {
        throw InvalidArgumentError("Matrix: dimension must be positive, got " +
                                   std::to_string(dim));
    }
    dim_ = dim;
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

bool Matrix::finite() const {
    for (const Complex& c : entries_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "multiply");
    const int n = a.dim();
    Matrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Matrix adjoint(const Matrix& m) {
    const int n = m.dim();
    Matrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = std::conj(m(j, i));
        }
    }
    return a;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    Matrix c(na * nb);
    for (int ia = 0; ia < na; ++ia) {
        for (int ja = 0; ja < na; ++ja) {
            const Complex f = a(ia, ja);
            if (f == Complex{0.0, 0.0}) continue;
            for (int ib = 0; ib < nb; ++ib) {
                for (int jb = 0; jb < nb; ++jb) {
                    c(ia * nb + ib, ja * nb + jb) = f * b(ib, jb);
                }
            }
        }
    }
    return c;
}

Matrix scale(const Matrix& m, Complex factor) {
    const int n = m.dim();
    Matrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) c(i, j) = factor * m(i, j);
    }
    return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    const int n = a.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double d = std::abs(a(i, j) - b(i, j));
            if (!(d <= worst)) worst = d;  // NaN propagates to the caller
        }
    }
    return worst;
}

double unitarity_residual(const Matrix& m) {
    if (!m.finite()) return std::numeric_limits<double>::infinity();
    const int n = m.dim();
    // Gram matrix of the columns: (m^dagger m)(i, j) = <col_i, col_j>.
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex g{0.0, 0.0};
            for (int k = 0; k < n; ++k) {
                g += std::conj(m(k, i)) * m(k, j);
            }
            const double target = (i == j) ? 1.0 : 0.0;
            const double d = std::abs(g - Complex{target, 0.0});
            if (d > worst) worst = d;
        }
    }
    return worst;
}

bool is_unitary(const Matrix& m, double tol) {
    validate_tolerance(tol);
    return unitarity_residual(m) <= tol;
}

void require_unitary(const Matrix& m, double tol, const char* what) {
    const double r = unitarity_residual(m);
    if (!(r <= tol)) {
        throw NotUnitaryError(std::string(what) + ": unitarity residual " +
                              std::to_string(r) + " exceeds tolerance");
    }
}

void validate_tolerance(double tol) {
    if (!(tol > 0.0) || tol > kLoosestTolerance) {
        throw InvalidArgumentError("tolerance must lie in (0, " +
                                   std::to_string(kLoosestTolerance) + "]");
    }
}

PhaseComparison compare_up_to_global_phase(const Matrix& a, const Matrix& b,
                                           double tol) {
    validate_tolerance(tol);
    require_same_dim(a, b, "compare_up_to_global_phase");
    const Matrix p = multiply(adjoint(a), b);
    const int n = p.dim();

    Complex trace{0.0, 0.0};
    for (int i = 0; i < n; ++i) trace += p(i, i);

    Complex anchor = trace;
    if (std::abs(trace) <= tol) {
        // Degenerate trace: align on the dominant entry of a^dagger b instead.
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double mag = std::abs(p(i, j));
                if (mag > best) {
                    best = mag;
                    anchor = p(i, j);
                }
            }
        }
    }

    PhaseComparison result;
    const double mag = std::abs(anchor);
    // If a = e^{i t} b then a^dagger b = e^{-i t} I, so the aligning scalar is
    // the conjugate of the anchor's direction.
    result.phase = (mag > 0.0) ? std::conj(anchor / mag) : Complex{1.0, 0.0};
    result.residual = max_abs_diff(a, scale(b, result.phase));
    result.equal = result.residual <= tol;
    return result;
}

bool equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol) {
    return compare_up_to_global_phase(a, b, tol).equal;
}

double phase_distance(const Matrix& a, const Matrix& b) {
    return compare_up_to_global_phase(a, b, kDefaultTolerance).residual;
}

}  // namespace qds
