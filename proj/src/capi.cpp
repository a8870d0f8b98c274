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

#include "quditsort.h"

#include <cmath>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/matrix.hpp"
#include "core/photonic.hpp"
#include "core/simulation.hpp"
#include "core/sorters.hpp"
#include "core/state.hpp"
#include "core/verification.hpp"

struct qds_matrix {
    qds::Matrix m;
};

struct qds_mapping {
    qds::sorters::CandidateMapping m;
};

struct qds_report {
    qds::sorters::SorterReport r;
};

struct qds_sim {
    int dim;
    qds::Matrix sorter;
    std::vector<qds::sim::Particle> particles;
};

struct qds_verification {
    std::vector<qds::verify::CheckResult> checks;
};

struct qds_layout {
    qds::photonic::PhotonicLayout layout;
    std::vector<qds::photonic::LayoutElement> elements;
    std::vector<std::string> kinds;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

qds_status fail(qds_status status, const char* message) {
    set_error(message);
    return status;
}

template <typename Fn>
qds_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return QDS_OK;
    } catch (const qds::DimensionMismatchError& e) {
        set_error(e.what());
        return QDS_ERROR_DIMENSION_MISMATCH;
    } catch (const qds::NotUnitaryError& e) {
        set_error(e.what());
        return QDS_ERROR_NOT_UNITARY;
    } catch (const qds::NotBasisStateError& e) {
        set_error(e.what());
        return QDS_ERROR_NOT_BASIS_STATE;
    } catch (const qds::MalformedMappingError& e) {
        set_error(e.what());
        return QDS_ERROR_MALFORMED_MAPPING;
    } catch (const qds::InvalidArgumentError& e) {
        set_error(e.what());
        return QDS_ERROR_INVALID_ARGUMENT;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return QDS_ERROR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return QDS_ERROR_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QDS_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown internal error");
        return QDS_ERROR_INTERNAL;
    }
}

template <typename Builder>
qds_status make_matrix(qds_matrix** out, Builder&& builder) {
    if (out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "output handle is NULL");
    }
    return guarded([&] { *out = new qds_matrix{builder()}; });
}

std::vector<qds::Complex> interleaved_to_complex(const double* re_im,
                                                 size_t len) {
    std::vector<qds::Complex> v;
    v.reserve(len / 2);
    for (size_t i = 0; i + 1 < len; i += 2) {
        v.emplace_back(re_im[i], re_im[i + 1]);
    }
    return v;
}

}  // namespace

extern "C" {

const char* qds_version(void) { return "1.0.0"; }

const char* qds_status_string(qds_status status) {
    switch (status) {
        case QDS_OK:
            return "ok";
        case QDS_ERROR_INVALID_ARGUMENT:
            return "invalid argument";
        case QDS_ERROR_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case QDS_ERROR_NOT_UNITARY:
            return "not unitary";
        case QDS_ERROR_NOT_BASIS_STATE:
            return "not a basis state";
        case QDS_ERROR_MALFORMED_MAPPING:
            return "malformed mapping";
        case QDS_ERROR_OUT_OF_MEMORY:
            return "out of memory";
        case QDS_ERROR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char* qds_sorter_class_string(qds_sorter_class c) {
    switch (c) {
        case QDS_SORTER_PERFECT:
            return "perfect";
        case QDS_SORTER_SINGLE_INPUT_PORT:
            return "single_input_port";
        case QDS_SORTER_MULTI_INPUT_PORT:
            return "multi_input_port";
        case QDS_SORTER_GENERAL:
            return "general_sorter";
        case QDS_SORTER_NOT_A_SORTER:
            return "not_a_sorter";
        case QDS_SORTER_NOT_UNITARY:
            return "not_unitary";
    }
    return "unknown class";
}

const char* qds_last_error(void) { return g_last_error.c_str(); }

qds_status qds_pauli_x(int dim, int power, qds_matrix** out) {
    return make_matrix(out, [&] { return qds::gates::pauli_x(dim, power); });
}

qds_status qds_pauli_z(int dim, int power, qds_matrix** out) {
    return make_matrix(out, [&] { return qds::gates::pauli_z(dim, power); });
}

qds_status qds_fourier(int dim, qds_matrix** out) {
    return make_matrix(out, [&] { return qds::gates::fourier(dim); });
}

qds_status qds_fourier_inverse(int dim, qds_matrix** out) {
    return make_matrix(out, [&] { return qds::gates::fourier_inverse(dim); });
}

qds_status qds_controlled(const qds_matrix* u, int dim, qds_matrix** out) {
    if (u == nullptr) return fail(QDS_ERROR_INVALID_ARGUMENT, "gate is NULL");
    return make_matrix(out, [&] { return qds::gates::controlled(u->m, dim); });
}

qds_status qds_port_controlled_x_dagger(int dim, qds_matrix** out) {
    return make_matrix(
        out, [&] { return qds::gates::port_controlled_x_dagger(dim); });
}

qds_status qds_dove_phase(int dim, int path, double angle, qds_matrix** out) {
    return make_matrix(
        out, [&] { return qds::photonic::dove_phase(dim, path, angle); });
}

qds_status qds_build_sqs(int dim, qds_matrix** out) {
    return make_matrix(out, [&] { return qds::sorters::build_sqs(dim); });
}

qds_status qds_build_mqs(int dim, qds_matrix** out) {
    return make_matrix(out, [&] { return qds::sorters::build_mqs(dim); });
}

qds_status qds_build_mqs_via_sqs(int dim, qds_matrix** out) {
    return make_matrix(out,
                       [&] { return qds::sorters::build_mqs_via_sqs(dim); });
}

qds_status qds_build_photonic_sorter(int dim, qds_matrix** out) {
    return make_matrix(
        out, [&] { return qds::photonic::build_photonic_sorter(dim); });
}

qds_status qds_build_polarization_sorter(qds_matrix** out) {
    return make_matrix(
        out, [&] { return qds::photonic::build_polarization_sorter(); });
}

int qds_matrix_dim(const qds_matrix* m) {
    return m == nullptr ? 0 : m->m.dim();
}

qds_status qds_matrix_entry(const qds_matrix* m, int row, int col, double* re,
                            double* im) {
    if (m == nullptr) return fail(QDS_ERROR_INVALID_ARGUMENT, "matrix is NULL");
    if (row < 0 || row >= m->m.dim() || col < 0 || col >= m->m.dim()) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "entry index out of range");
    }
    const qds::Complex v = m->m(row, col);
    if (re != nullptr) *re = v.real();
    if (im != nullptr) *im = v.imag();
    return QDS_OK;
}

qds_status qds_matrix_multiply(const qds_matrix* a, const qds_matrix* b,
                               qds_matrix** out) {
    if (a == nullptr || b == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "operand is NULL");
    }
    return make_matrix(out, [&] { return qds::multiply(a->m, b->m); });
}

qds_status qds_matrix_tensor(const qds_matrix* a, const qds_matrix* b,
                             qds_matrix** out) {
    if (a == nullptr || b == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "operand is NULL");
    }
    return make_matrix(out, [&] { return qds::tensor_product(a->m, b->m); });
}

qds_status qds_matrix_adjoint(const qds_matrix* m, qds_matrix** out) {
    if (m == nullptr) return fail(QDS_ERROR_INVALID_ARGUMENT, "matrix is NULL");
    return make_matrix(out, [&] { return qds::adjoint(m->m); });
}

qds_status qds_matrix_max_abs_diff(const qds_matrix* a, const qds_matrix* b,
                                   double* out) {
    if (a == nullptr || b == nullptr || out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] { *out = qds::max_abs_diff(a->m, b->m); });
}

qds_status qds_matrix_unitarity_residual(const qds_matrix* m, double* out) {
    if (m == nullptr || out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] { *out = qds::unitarity_residual(m->m); });
}

qds_status qds_matrix_equal_up_to_global_phase(const qds_matrix* a,
                                               const qds_matrix* b, double tol,
                                               int* equal, double* residual) {
    if (a == nullptr || b == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "operand is NULL");
    }
    return guarded([&] {
        const qds::PhaseComparison cmp =
            qds::compare_up_to_global_phase(a->m, b->m, tol);
        if (equal != nullptr) *equal = cmp.equal ? 1 : 0;
        if (residual != nullptr) *residual = cmp.residual;
    });
}

void qds_matrix_free(qds_matrix* m) { delete m; }

qds_status qds_mapping_create(int dim, qds_mapping** out) {
    if (out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "output handle is NULL");
    }
    return guarded([&] {
        *out = new qds_mapping{qds::sorters::CandidateMapping(dim)};
    });
}

qds_status qds_mapping_set_image(qds_mapping* mapping, int s, int k,
                                 const double* re_im, size_t len) {
    if (mapping == nullptr || re_im == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] {
        mapping->m.set_image(s, k, interleaved_to_complex(re_im, len));
    });
}

qds_status qds_mapping_from_matrix(const qds_matrix* u, int dim,
                                   qds_mapping** out) {
    if (u == nullptr || out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] {
        *out = new qds_mapping{
            qds::sorters::CandidateMapping::from_matrix(u->m, dim)};
    });
}

void qds_mapping_free(qds_mapping* mapping) { delete mapping; }

qds_status qds_classify(const qds_mapping* mapping, qds_report** out) {
    if (mapping == nullptr || out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded(
        [&] { *out = new qds_report{qds::sorters::classify(mapping->m)}; });
}

qds_status qds_attempt_perfect_sorter(int dim, qds_report** out) {
    if (out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "output handle is NULL");
    }
    return guarded([&] {
        *out = new qds_report{qds::sorters::attempt_perfect_sorter(dim)};
    });
}

qds_sorter_class qds_report_classification(const qds_report* report) {
    if (report == nullptr) return QDS_SORTER_NOT_A_SORTER;
    switch (report->r.classification) {
        case qds::sorters::SorterClass::Perfect:
            return QDS_SORTER_PERFECT;
        case qds::sorters::SorterClass::SingleInputPort:
            return QDS_SORTER_SINGLE_INPUT_PORT;
        case qds::sorters::SorterClass::MultiInputPort:
            return QDS_SORTER_MULTI_INPUT_PORT;
        case qds::sorters::SorterClass::GeneralSorter:
            return QDS_SORTER_GENERAL;
        case qds::sorters::SorterClass::NotASorter:
            return QDS_SORTER_NOT_A_SORTER;
        case qds::sorters::SorterClass::NotUnitary:
            return QDS_SORTER_NOT_UNITARY;
    }
    return QDS_SORTER_NOT_A_SORTER;
}

int qds_report_is_unitary(const qds_report* report) {
    return (report != nullptr && report->r.is_unitary) ? 1 : 0;
}

double qds_report_max_gram_residual(const qds_report* report) {
    return report == nullptr ? 0.0 : report->r.max_gram_residual;
}

int qds_report_sorting_ports(const qds_report* report, int* out, size_t cap) {
    if (report == nullptr) return 0;
    const std::vector<int>& ports = report->r.sorting_ports;
    if (out != nullptr) {
        for (size_t i = 0; i < ports.size() && i < cap; ++i) {
            out[i] = ports[i];
        }
    }
    return static_cast<int>(ports.size());
}

int qds_report_has_witness(const qds_report* report) {
    return (report != nullptr && report->r.witness.has_value()) ? 1 : 0;
}

qds_status qds_report_witness(const qds_report* report, int* s1, int* k1,
                              int* s2, int* k2, double* overlap) {
    if (report == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "report is NULL");
    }
    if (!report->r.witness.has_value()) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "report carries no witness");
    }
    const qds::sorters::CollisionWitness& w = *report->r.witness;
    if (s1 != nullptr) *s1 = w.first.state;
    if (k1 != nullptr) *k1 = w.first.port;
    if (s2 != nullptr) *s2 = w.second.state;
    if (k2 != nullptr) *k2 = w.second.port;
    if (overlap != nullptr) *overlap = std::abs(w.overlap);
    return QDS_OK;
}

void qds_report_free(qds_report* report) { delete report; }

qds_status qds_sim_create(int dim, const qds_matrix* sorter, qds_sim** out) {
    if (sorter == nullptr || out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] {
        if (dim < 2 || dim > qds::kMaxQuditDimension) {
            throw qds::InvalidArgumentError(
                "simulation dimension must lie in [2, 64]");
        }
        if (sorter->m.dim() != dim * dim) {
            throw qds::DimensionMismatchError(
                "sorter dimension must equal dim^2");
        }
        qds::require_unitary(sorter->m, qds::kDefaultTolerance, "sim sorter");
        *out = new qds_sim{dim, sorter->m, {}};
    });
}

qds_status qds_sim_add_basis_particle(qds_sim* sim, int state, int port) {
    if (sim == nullptr) return fail(QDS_ERROR_INVALID_ARGUMENT, "sim is NULL");
    return guarded([&] {
        sim->particles.push_back(
            qds::sim::Particle::basis(sim->dim, state, port));
    });
}

qds_status qds_sim_add_particle(qds_sim* sim, const double* re_im, size_t len,
                                int port) {
    if (sim == nullptr || re_im == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] {
        std::vector<qds::Complex> amps = interleaved_to_complex(re_im, len);
        if (amps.size() != static_cast<size_t>(sim->dim)) {
            throw qds::DimensionMismatchError(
                "particle amplitude count must equal the dimension");
        }
        sim->particles.emplace_back(std::move(amps), port);
    });
}

int qds_sim_particle_count(const qds_sim* sim) {
    return sim == nullptr ? 0 : static_cast<int>(sim->particles.size());
}

qds_status qds_sim_sort_deterministic(const qds_sim* sim, int* out_ports,
                                      int* out_states) {
    if (sim == nullptr || out_ports == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] {
        const std::vector<qds::sim::SortOutcomeRecord> records =
            qds::sim::sort_deterministic(sim->particles, sim->sorter, sim->dim);
        for (size_t i = 0; i < records.size(); ++i) {
            out_ports[i] = records[i].output_port;
            if (out_states != nullptr) {
                out_states[i] = records[i].output_system_state;
            }
        }
    });
}

qds_status qds_sim_sample(const qds_sim* sim, long long shots, uint64_t seed,
                          long long* counts) {
    if (sim == nullptr || counts == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] {
        const qds::sim::ClickHistogram histogram = qds::sim::sample_clicks(
            sim->particles, sim->sorter, sim->dim, shots, seed);
        for (size_t i = 0; i < histogram.counts.size(); ++i) {
            counts[i] = histogram.counts[i];
        }
    });
}

qds_status qds_sim_sample_joint(const qds_sim* sim, long long shots,
                                uint64_t seed, long long* counts) {
    if (sim == nullptr || counts == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] {
        const std::vector<long long> joint = qds::sim::sample_clicks_joint(
            sim->particles, sim->sorter, sim->dim, shots, seed);
        for (size_t i = 0; i < joint.size(); ++i) counts[i] = joint[i];
    });
}

void qds_sim_free(qds_sim* sim) { delete sim; }

qds_status qds_infer_input_histogram(const long long* counts, int dim,
                                     long long shots_per_particle,
                                     double* out) {
    if (counts == nullptr || out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "argument is NULL");
    }
    return guarded([&] {
        if (dim < 2) {
            throw qds::InvalidArgumentError("dimension must be at least 2");
        }
        qds::sim::ClickHistogram histogram;
        histogram.dim = dim;
        histogram.counts.assign(counts, counts + dim);
        histogram.shots_per_particle = shots_per_particle;
        const std::vector<double> inferred =
            qds::sim::infer_input_histogram(histogram);
        for (size_t i = 0; i < inferred.size(); ++i) out[i] = inferred[i];
    });
}

qds_status qds_verification_run(int dmin, int dmax, double tol,
                                qds_verification** out) {
    if (out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "output handle is NULL");
    }
    return guarded([&] {
        *out = new qds_verification{qds::verify::run_suite(dmin, dmax, tol)};
    });
}

int qds_verification_count(const qds_verification* v) {
    return v == nullptr ? 0 : static_cast<int>(v->checks.size());
}

int qds_verification_all_passed(const qds_verification* v) {
    return (v != nullptr && qds::verify::all_passed(v->checks)) ? 1 : 0;
}

const char* qds_verification_name(const qds_verification* v, int i) {
    if (v == nullptr || i < 0 || i >= static_cast<int>(v->checks.size())) {
        return "";
    }
    return v->checks[static_cast<size_t>(i)].name.c_str();
}

int qds_verification_dim(const qds_verification* v, int i) {
    if (v == nullptr || i < 0 || i >= static_cast<int>(v->checks.size())) {
        return 0;
    }
    return v->checks[static_cast<size_t>(i)].dim;
}

int qds_verification_passed(const qds_verification* v, int i) {
    if (v == nullptr || i < 0 || i >= static_cast<int>(v->checks.size())) {
        return 0;
    }
    return v->checks[static_cast<size_t>(i)].passed ? 1 : 0;
}

double qds_verification_residual(const qds_verification* v, int i) {
    if (v == nullptr || i < 0 || i >= static_cast<int>(v->checks.size())) {
        return 0.0;
    }
    return v->checks[static_cast<size_t>(i)].residual;
}

void qds_verification_free(qds_verification* v) { delete v; }

qds_status qds_layout_create(int dim, qds_layout** out) {
    if (out == nullptr) {
        return fail(QDS_ERROR_INVALID_ARGUMENT, "output handle is NULL");
    }
    return guarded([&] {
        auto layout = std::make_unique<qds_layout>();
        layout->layout = qds::photonic::PhotonicLayout::standard(dim);
        layout->elements = layout->layout.elements();
        layout->kinds.reserve(layout->elements.size());
        for (const auto& e : layout->elements) {
            layout->kinds.emplace_back(qds::photonic::to_string(e.kind));
        }
        *out = layout.release();
    });
}

int qds_layout_dim(const qds_layout* layout) {
    return layout == nullptr ? 0 : layout->layout.dim;
}

int qds_layout_element_count(const qds_layout* layout) {
    return layout == nullptr ? 0 : static_cast<int>(layout->elements.size());
}

const char* qds_layout_element_kind(const qds_layout* layout, int i) {
    if (layout == nullptr || i < 0 ||
        i >= static_cast<int>(layout->elements.size())) {
        return "";
    }
    return layout->kinds[static_cast<size_t>(i)].c_str();
}

int qds_layout_element_path(const qds_layout* layout, int i) {
    if (layout == nullptr || i < 0 ||
        i >= static_cast<int>(layout->elements.size())) {
        return -1;
    }
    return layout->elements[static_cast<size_t>(i)].path;
}

const char* qds_layout_element_label(const qds_layout* layout, int i) {
    if (layout == nullptr || i < 0 ||
        i >= static_cast<int>(layout->elements.size())) {
        return "";
    }
    return layout->elements[static_cast<size_t>(i)].label.c_str();
}

double qds_layout_element_angle(const qds_layout* layout, int i) {
    if (layout == nullptr || i < 0 ||
        i >= static_cast<int>(layout->elements.size())) {
        return 0.0;
    }
    return layout->elements[static_cast<size_t>(i)].angle;
}

void qds_layout_free(qds_layout* layout) { delete layout; }

}  // extern "C"
