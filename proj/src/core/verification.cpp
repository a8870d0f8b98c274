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

#include "core/verification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/photonic.hpp"
#include "core/sorters.hpp"
#include "core/state.hpp"

namespace qds::verify {

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, int dim,
         double residual, double tol) {
    out.push_back(CheckResult{name, dim, residual < tol, residual});
}

double port_weight_deviation(const Matrix& sorter, int dim, bool expect_all,
                             double /*tol*/) {
    // expect_all: every input (s, k) must exit through port s.
    // otherwise:  only k = 0 may do so; for k != 0 the weight in port s must
    //             vanish.
    double worst = 0.0;
    for (int s = 0; s < dim; ++s) {
        for (int k = 0; k < dim; ++k) {
            const JointState out =
                apply(sorter, JointState::basis(dim, dim, s, k));
            const double w =
                out.port_probabilities()[static_cast<std::size_t>(s)];
            const double dev =
                (expect_all || k == 0) ? std::abs(1.0 - w) : std::abs(w);
            worst = std::max(worst, dev);
        }
    }
    return worst;
}

}  // namespace

std::vector<CheckResult> run_suite(int dmin, int dmax, double tol) {
    if (dmin < 2 || dmin > dmax || dmax > kMaxVerifyDimension) {
        throw InvalidArgumentError(
            "verification range must satisfy 2 <= dmin <= dmax <= " +
            std::to_string(kMaxVerifyDimension));
    }
    if (tol < 1e-12 || tol > kLoosestTolerance) {
        throw InvalidArgumentError("verification tolerance must lie in [1e-12, 1e-6]");
    }

    std::vector<CheckResult> results;
    for (int d = dmin; d <= dmax; ++d) {
        const Matrix x = gates::pauli_x(d, 1);
        const Matrix z = gates::pauli_z(d, 1);
        const Matrix f = gates::fourier(d);
        const Matrix f_dag = gates::fourier_inverse(d);
        const Matrix cx = gates::controlled(x, d);
        const Matrix cz = gates::controlled(z, d);
        const Matrix pcxd = gates::port_controlled_x_dagger(d);
        const Matrix sqs = sorters::build_sqs(d);
        const Matrix mqs = sorters::build_mqs(d);
        const Matrix photonic_sorter = photonic::build_photonic_sorter(d);
        const Matrix eye = Matrix::identity(d);

        {
            double worst = 0.0;
            for (const Matrix* g :
                 {&x, &z, &f, &f_dag, &cx, &cz, &pcxd, &sqs, &mqs, &photonic_sorter}) {
                worst = std::max(worst, unitarity_residual(*g));
            }
            worst = std::max(worst,
                             unitarity_residual(gates::pauli_x(d, -1)));
            add(results, "gate_unitarity", d, worst, tol);
        }

        add(results, "weyl_commutation", d,
            max_abs_diff(multiply(z, x),
                         scale(multiply(x, z), gates::root_of_unity(d, 1))),
            tol);

        {
            Matrix xp = Matrix::identity(d);
            Matrix zp = Matrix::identity(d);
            for (int i = 0; i < d; ++i) {
                xp = multiply(xp, x);
                zp = multiply(zp, z);
            }
            const double worst = std::max(max_abs_diff(xp, eye),
                                          max_abs_diff(zp, eye));
            add(results, "pauli_power_cycle", d, worst, tol);
        }

        add(results, "fourier_conjugation", d,
            max_abs_diff(multiply(f_dag, multiply(z, f)), x), tol);

        add(results, "sqs_fourier_decomposition", d,
            max_abs_diff(cx, multiply(tensor_product(eye, f_dag),
                                      multiply(cz, tensor_product(eye, f)))),
            tol);

        add(results, "mqs_factorization", d,
            max_abs_diff(multiply(sqs, pcxd), mqs), tol);

        {
            const sorters::SorterReport report =
                sorters::attempt_perfect_sorter(d);
            const bool infeasible =
                report.classification == sorters::SorterClass::NotUnitary &&
                report.witness.has_value();
            const double overlap =
                report.witness ? std::abs(report.witness->overlap) : 0.0;
            // Residual: how far the witness overlap is from a full collision.
            const double residual =
                infeasible ? std::abs(1.0 - overlap) : 1.0;
            add(results, "perfect_sorter_infeasible", d, residual, tol);
        }

        add(results, "mqs_sorting_ports", d,
            port_weight_deviation(mqs, d, /*expect_all=*/true, tol), tol);
        add(results, "sqs_port_zero_only", d,
            port_weight_deviation(sqs, d, /*expect_all=*/false, tol), tol);

        {
            Matrix prisms = Matrix::identity(d * d);
            const std::vector<double> angles =
                photonic::standard_prism_angles(d);
            for (int k = 1; k < d; ++k) {
                prisms = multiply(photonic::dove_phase(
                                      d, k, angles[static_cast<std::size_t>(k)]),
                                  prisms);
            }
            add(results, "dove_prism_assembly", d, max_abs_diff(prisms, cz),
                tol);
        }

        add(results, "photonic_mqs_equivalence", d,
            phase_distance(photonic_sorter, mqs), tol);

        if (d == 4) {
            const Matrix x_dag = gates::pauli_x(4, -1);
            const double worst = std::max(
                max_abs_diff(multiply(x_dag, x_dag), gates::pauli_x(4, 2)),
                max_abs_diff(multiply(x_dag, multiply(x_dag, x_dag)),
                             gates::pauli_x(4, 1)));
            add(results, "x4_power_shortcuts", d, worst, tol);
        }

        if (d == 2) {
            // Polarization sorter rows: (H,0)->(H,0), (H,1)->(V,0),
            // (V,0)->(V,1), (V,1)->(H,1).
            const Matrix pol = photonic::build_polarization_sorter();
            const int expected[4][4] = {
                {0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}};
            double worst = 0.0;
            for (const auto& row : expected) {
                const JointState out =
                    apply(pol, JointState::basis(2, 2, row[0], row[1]));
                const JointState want =
                    JointState::basis(2, 2, row[2], row[3]);
                for (int i = 0; i < out.size(); ++i) {
                    worst = std::max(
                        worst,
                        std::abs(out.amplitudes()[static_cast<std::size_t>(i)] -
                                 want.amplitudes()[static_cast<std::size_t>(i)]));
                }
            }
            add(results, "polarization_rows", d, worst, tol);
        }
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace qds::verify
