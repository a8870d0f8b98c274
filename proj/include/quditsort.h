/* Copyright 2026 The quditsort Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* quditsort — construction, verification, and simulation of quDit sorters.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed by the library; every fallible call returns a qds_status and
 * writes its result through out-parameters. On failure the out-parameter is
 * left untouched and qds_last_error() describes the problem for the calling
 * thread.
 *
 * Conventions:
 *   - A quDit has dimension D with 2 <= D <= 64.
 *   - Joint-space objects (sorters, two-quDit gates) have dimension D^2 with
 *     the basis index of |system s, port k> equal to s * D + k.
 *   - Complex data crosses the boundary as interleaved doubles re,im,re,im...
 */

#ifndef QUDITSORT_H
#define QUDITSORT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QDS_BUILD)
#define QDS_API __declspec(dllexport)
#else
#define QDS_API __declspec(dllimport)
#endif
#else
#define QDS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qds_status {
    QDS_OK = 0,
    QDS_ERROR_INVALID_ARGUMENT = 1,
    QDS_ERROR_DIMENSION_MISMATCH = 2,
    QDS_ERROR_NOT_UNITARY = 3,
    QDS_ERROR_NOT_BASIS_STATE = 4,
    QDS_ERROR_MALFORMED_MAPPING = 5,
    QDS_ERROR_OUT_OF_MEMORY = 6,
    QDS_ERROR_INTERNAL = 7
} qds_status;

typedef enum qds_sorter_class {
    QDS_SORTER_PERFECT = 0,
    QDS_SORTER_SINGLE_INPUT_PORT = 1,
    QDS_SORTER_MULTI_INPUT_PORT = 2,
    QDS_SORTER_GENERAL = 3,
    QDS_SORTER_NOT_A_SORTER = 4,
    QDS_SORTER_NOT_UNITARY = 5
} qds_sorter_class;

typedef struct qds_matrix qds_matrix;
typedef struct qds_mapping qds_mapping;
typedef struct qds_report qds_report;
typedef struct qds_sim qds_sim;
typedef struct qds_verification qds_verification;
typedef struct qds_layout qds_layout;

QDS_API const char* qds_version(void);
QDS_API const char* qds_status_string(qds_status status);
QDS_API const char* qds_sorter_class_string(qds_sorter_class c);

/* Message describing the most recent failure on the calling thread. */
QDS_API const char* qds_last_error(void);

/* ---- elementary gates ------------------------------------------------- */

/* Generalized Pauli shift |s> -> |s + power mod D|; negative powers invert. */
QDS_API qds_status qds_pauli_x(int dim, int power, qds_matrix** out);

/* Generalized Pauli phase, diagonal entries omega^{j*power}. */
QDS_API qds_status qds_pauli_z(int dim, int power, qds_matrix** out);

/* Quantum Fourier transform, entries omega^{jk} / sqrt(D). */
QDS_API qds_status qds_fourier(int dim, qds_matrix** out);
QDS_API qds_status qds_fourier_inverse(int dim, qds_matrix** out);

/* Controlled gate C(U)|s>|k> = |s> U^s |k>; u must be a D x D unitary. */
QDS_API qds_status qds_controlled(const qds_matrix* u, int dim,
                                  qds_matrix** out);

/* Port-controlled inverse shift |s>|k> -> |s - k mod D>|k>. */
QDS_API qds_status qds_port_controlled_x_dagger(int dim, qds_matrix** out);

/* Dove prism at `angle` in one path: phase e^{i 2 s angle} when the port
 * register equals path. */
QDS_API qds_status qds_dove_phase(int dim, int path, double angle,
                                  qds_matrix** out);

/* ---- sorters ----------------------------------------------------------- */

/* Single-input-port sorter |s>|k> -> |s>|s + k mod D>. */
QDS_API qds_status qds_build_sqs(int dim, qds_matrix** out);

/* Multi-input-port sorter |s>|k> -> |s - k mod D>|s>. */
QDS_API qds_status qds_build_mqs(int dim, qds_matrix** out);

/* The MQS assembled from its factorization SQS * PC(X^dagger). */
QDS_API qds_status qds_build_mqs_via_sqs(int dim, qds_matrix** out);

/* Optical model: per-path shift gates, Fourier, Dove prisms, inverse
 * Fourier. Equals the MQS up to a global phase. */
QDS_API qds_status qds_build_photonic_sorter(int dim, qds_matrix** out);

/* Two-path polarization sorter (half-wave plate + polarizing beam
 * splitter); the dim-2 MQS. */
QDS_API qds_status qds_build_polarization_sorter(qds_matrix** out);

/* ---- matrix operations -------------------------------------------------- */

QDS_API int qds_matrix_dim(const qds_matrix* m);
QDS_API qds_status qds_matrix_entry(const qds_matrix* m, int row, int col,
                                    double* re, double* im);
QDS_API qds_status qds_matrix_multiply(const qds_matrix* a,
                                       const qds_matrix* b, qds_matrix** out);
QDS_API qds_status qds_matrix_tensor(const qds_matrix* a, const qds_matrix* b,
                                     qds_matrix** out);
QDS_API qds_status qds_matrix_adjoint(const qds_matrix* m, qds_matrix** out);
QDS_API qds_status qds_matrix_max_abs_diff(const qds_matrix* a,
                                           const qds_matrix* b, double* out);
QDS_API qds_status qds_matrix_unitarity_residual(const qds_matrix* m,
                                                 double* out);

/* 1 in *equal when a equals e^{i theta} b within tol for some theta; the
 * residual at the aligning phase lands in *residual (either out-param may be
 * NULL). */
QDS_API qds_status qds_matrix_equal_up_to_global_phase(const qds_matrix* a,
                                                       const qds_matrix* b,
                                                       double tol, int* equal,
                                                       double* residual);
QDS_API void qds_matrix_free(qds_matrix* m);

/* ---- candidate mappings and classification ------------------------------ */

QDS_API qds_status qds_mapping_create(int dim, qds_mapping** out);

/* Image of basis input |s>|k>: interleaved complex vector of length dim^2
 * (so 2*dim^2 doubles). */
QDS_API qds_status qds_mapping_set_image(qds_mapping* mapping, int s, int k,
                                         const double* re_im, size_t len);

/* Columns of a dim^2 x dim^2 matrix become the images. */
QDS_API qds_status qds_mapping_from_matrix(const qds_matrix* u, int dim,
                                           qds_mapping** out);
QDS_API void qds_mapping_free(qds_mapping* mapping);

/* Classifies a complete mapping against the sorter condition "state |s>
 * exits through port |s>". */
QDS_API qds_status qds_classify(const qds_mapping* mapping, qds_report** out);

/* Builds the would-be perfect sorter table |s>|k> -> |s>|s> and classifies
 * it; the verdict is NOT_UNITARY with a collision witness for every dim. */
QDS_API qds_status qds_attempt_perfect_sorter(int dim, qds_report** out);

QDS_API qds_sorter_class qds_report_classification(const qds_report* report);
QDS_API int qds_report_is_unitary(const qds_report* report);
QDS_API double qds_report_max_gram_residual(const qds_report* report);

/* Ports on which the sorter condition holds, ascending. Returns the count;
 * fills at most cap entries when out is non-NULL. */
QDS_API int qds_report_sorting_ports(const qds_report* report, int* out,
                                     size_t cap);

QDS_API int qds_report_has_witness(const qds_report* report);

/* Colliding input pair (s1,k1), (s2,k2) and the modulus of the overlap of
 * their images. Fails when no witness exists. */
QDS_API qds_status qds_report_witness(const qds_report* report, int* s1,
                                      int* k1, int* s2, int* k2,
                                      double* overlap);
QDS_API void qds_report_free(qds_report* report);

/* ---- multi-particle simulation ------------------------------------------ */

/* The sorter must be a dim^2-dimensional unitary; the handle keeps a copy. */
QDS_API qds_status qds_sim_create(int dim, const qds_matrix* sorter,
                                  qds_sim** out);
QDS_API qds_status qds_sim_add_basis_particle(qds_sim* sim, int state,
                                              int port);

/* Superposed particle: interleaved complex amplitudes of length dim
 * (2*dim doubles), unit norm. */
QDS_API qds_status qds_sim_add_particle(qds_sim* sim, const double* re_im,
                                        size_t len, int port);
QDS_API int qds_sim_particle_count(const qds_sim* sim);

/* Deterministic sorting of basis-state particles. Arrays hold one entry per
 * particle; out_states may be NULL. */
QDS_API qds_status qds_sim_sort_deterministic(const qds_sim* sim,
                                              int* out_ports, int* out_states);

/* Born sampling of the port register, `shots` per particle. counts has
 * length dim and receives the per-port clicks; identical (particles, sorter,
 * shots, seed) produce identical counts on every platform. */
QDS_API qds_status qds_sim_sample(const qds_sim* sim, long long shots,
                                  uint64_t seed, long long* counts);

/* Joint measurement variant: counts has length dim^2, cell s * dim + k. */
QDS_API qds_status qds_sim_sample_joint(const qds_sim* sim, long long shots,
                                        uint64_t seed, long long* counts);
QDS_API void qds_sim_free(qds_sim* sim);

/* Estimated number of particles initially in each system state: counts
 * divided by shots_per_particle. counts and out both have length dim. */
QDS_API qds_status qds_infer_input_histogram(const long long* counts, int dim,
                                             long long shots_per_particle,
                                             double* out);

/* ---- verification suite -------------------------------------------------- */

/* Runs every invariant check for each dimension in [dmin, dmax];
 * 2 <= dmin <= dmax <= 16, tol in [1e-12, 1e-6]. */
QDS_API qds_status qds_verification_run(int dmin, int dmax, double tol,
                                        qds_verification** out);
QDS_API int qds_verification_count(const qds_verification* v);
QDS_API int qds_verification_all_passed(const qds_verification* v);
QDS_API const char* qds_verification_name(const qds_verification* v, int i);
QDS_API int qds_verification_dim(const qds_verification* v, int i);
QDS_API int qds_verification_passed(const qds_verification* v, int i);
QDS_API double qds_verification_residual(const qds_verification* v, int i);
QDS_API void qds_verification_free(qds_verification* v);

/* ---- photonic layout description ----------------------------------------- */

/* Ordered element list of the dim-path optical sorter. */
QDS_API qds_status qds_layout_create(int dim, qds_layout** out);
QDS_API int qds_layout_dim(const qds_layout* layout);
QDS_API int qds_layout_element_count(const qds_layout* layout);

/* "input_gate", "fourier", "dove_prism", or "fourier_inverse". */
QDS_API const char* qds_layout_element_kind(const qds_layout* layout, int i);

/* Path the element sits in; -1 when it spans all paths. */
QDS_API int qds_layout_element_path(const qds_layout* layout, int i);
QDS_API const char* qds_layout_element_label(const qds_layout* layout, int i);

/* Prism rotation angle in radians; 0 for non-prism elements. */
QDS_API double qds_layout_element_angle(const qds_layout* layout, int i);
QDS_API void qds_layout_free(qds_layout* layout);

#ifdef __cplusplus
}
#endif

#endif /* QUDITSORT_H */
