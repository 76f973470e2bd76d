/*
 * Copyright 2026 The prqc developers.
 *
 * This source code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * prqc - pseudo-random quantum circuit simulation.
 *
 * C interface to the prqc shared library. The library simulates the
 * constant-depth random-circuit construction (independent Haar-random U(2)
 * rotations per qubit followed by a fixed nearest-neighbor ZZ coupling at
 * angle pi/4), exact Haar/CUE reference sampling, Meyer-Wallach entanglement
 * ensembles, matrix-element and eigenvector distribution diagnostics, and the
 * motion-reversal protocol for stochastic noise estimation.
 *
 * Conventions:
 *  - every fallible call returns a prqc_status; PRQC_OK is 0;
 *  - on failure, prqc_last_error() returns a thread-local message describing
 *    the most recent failing call on this thread;
 *  - objects returned through out-parameters are owned by the caller and
 *    released with the matching *_free function;
 *  - all randomness is derived from explicit 64-bit seeds: trial t of a run
 *    seeded with s uses prqc_mix_seed(s, t). Equal seeds give bit-identical
 *    results within one build.
 */

#ifndef PRQC_H
#define PRQC_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32
#define PRQC_API __declspec(dllexport)
#else
#define PRQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prqc_status {
  PRQC_OK = 0,
  PRQC_ERR_ARGUMENT = 1,            /* bad parameter */
  PRQC_ERR_VALIDATION = 2,          /* input violates a numeric contract */
  PRQC_ERR_CAPACITY = 3,            /* request exceeds dense-simulation guards */
  PRQC_ERR_PARSE = 4,               /* malformed document */
  PRQC_ERR_UNSUPPORTED_VERSION = 5, /* document version tag not understood */
  PRQC_ERR_NUMERICAL = 6,           /* numeric routine failed */
  PRQC_ERR_MODE = 7,                /* operation needs a different simulation mode */
  PRQC_ERR_INTERNAL = 8
} prqc_status;

typedef enum prqc_source_kind {
  PRQC_SOURCE_CIRCUIT = 0, /* m-layer pseudo-random circuits */
  PRQC_SOURCE_HAAR = 1     /* exact Haar (CUE) reference sampler */
} prqc_source_kind;

/* Library version string, e.g. "0.1.0". */
PRQC_API const char* prqc_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
PRQC_API const char* prqc_last_error(void);

/* Child-seed derivation used throughout the library (SplitMix64 step). */
PRQC_API uint64_t prqc_mix_seed(uint64_t seed, uint64_t index);

/* Exact CUE average of the Meyer-Wallach indicator, (D-2)/(D+1); D = 2^n_q,
 * n_q >= 2. Returns NaN on invalid dimension. */
PRQC_API double prqc_cue_q_mean(uint64_t dim);

/* ------------------------------------------------------------------ */
/* circuits                                                            */
/* ------------------------------------------------------------------ */

typedef struct prqc_circuit prqc_circuit;

/* Samples an m-layer circuit on n_q qubits (n_q >= 2, m >= 0). */
PRQC_API prqc_status prqc_circuit_sample(uint32_t n_q, uint32_t m, uint64_t seed,
                                         prqc_circuit** out);
PRQC_API void prqc_circuit_free(prqc_circuit* c);

PRQC_API int32_t prqc_circuit_num_qubits(const prqc_circuit* c);
PRQC_API int32_t prqc_circuit_num_layers(const prqc_circuit* c);

/* Serializes to the version-1 circuit JSON document. The returned string is
 * released with prqc_string_free. */
PRQC_API prqc_status prqc_circuit_to_json(const prqc_circuit* c, char** json_out);
PRQC_API prqc_status prqc_circuit_from_json(const char* json, prqc_circuit** out);
PRQC_API void prqc_string_free(char* s);

/* Applies the circuit to |basis_index> and returns the Meyer-Wallach Q of
 * the output state. */
PRQC_API prqc_status prqc_circuit_apply_basis_q(const prqc_circuit* c, uint64_t basis_index,
                                                double* q_out);

/* ------------------------------------------------------------------ */
/* Meyer-Wallach Q ensembles                                           */
/* ------------------------------------------------------------------ */

typedef struct prqc_report prqc_report;

/* Draws n_trials unitaries (circuit layers m ignored for the haar source),
 * applies each to |basis_index>, and aggregates Q. ks_to_cue is the
 * two-sample KS distance against an equal-size Haar reference batch. */
PRQC_API prqc_status prqc_q_ensemble_run(prqc_source_kind source, uint32_t n_q, uint32_t m,
                                         uint32_t n_trials, uint64_t seed, uint64_t basis_index,
                                         uint32_t histogram_bins, prqc_report** out);

PRQC_API uint32_t prqc_report_num_trials(const prqc_report* r);
PRQC_API double prqc_report_q_mean(const prqc_report* r);
PRQC_API double prqc_report_q_std(const prqc_report* r);
PRQC_API double prqc_report_ks_to_cue(const prqc_report* r);
PRQC_API uint32_t prqc_report_histogram_bins(const prqc_report* r);
/* edges has histogram_bins+1 slots, counts has histogram_bins slots. */
PRQC_API prqc_status prqc_report_histogram(const prqc_report* r, double* edges, uint64_t* counts);
PRQC_API size_t prqc_report_num_samples(const prqc_report* r);
PRQC_API prqc_status prqc_report_samples(const prqc_report* r, double* out, size_t capacity);
/* JSON mirror of the report (histogram, raw samples, metadata). */
PRQC_API prqc_status prqc_report_to_json(const prqc_report* r, char** json_out);
PRQC_API void prqc_report_free(prqc_report* r);

/* ------------------------------------------------------------------ */
/* distribution diagnostics                                            */
/* ------------------------------------------------------------------ */

/* Pools y = |U_ij|^2 over all entries of n_matrices sampled unitaries.
 * *samples_out is a malloc'd buffer of *len_out doubles; release with
 * prqc_buffer_free. */
PRQC_API prqc_status prqc_element_samples(prqc_source_kind source, uint32_t n_q, uint32_t m,
                                          uint32_t n_matrices, uint64_t seed, double** samples_out,
                                          size_t* len_out);

/* Pools squared eigenvector components; matrices with eigenvalue spacing
 * below 1e-10 are skipped and counted in *skipped_out. */
PRQC_API prqc_status prqc_eigvec_samples(prqc_source_kind source, uint32_t n_q, uint32_t m,
                                         uint32_t n_matrices, uint64_t seed, double** samples_out,
                                         size_t* len_out, uint32_t* skipped_out);
PRQC_API void prqc_buffer_free(double* buf);

/* KS distance of samples against the CUE element law 1 - (1-y)^(D-1). */
PRQC_API prqc_status prqc_ks_to_element_law(const double* samples, size_t len, uint64_t dim,
                                            double* ks_out);

/* ------------------------------------------------------------------ */
/* concentration of measure                                            */
/* ------------------------------------------------------------------ */

/* Haar-source Q standard deviation per register size; q_std_out has count
 * slots. Row j is seeded prqc_mix_seed(seed, j). */
PRQC_API prqc_status prqc_concentration_scan(const uint32_t* n_q_list, size_t count,
                                             uint32_t n_trials, uint64_t seed, double* q_std_out);

/* ------------------------------------------------------------------ */
/* motion-reversal noise estimation                                    */
/* ------------------------------------------------------------------ */

typedef struct prqc_decay prqc_decay;

/* Runs the motion-reversal protocol (U applied n times, then U^dag n times,
 * noise after every application) for n = 0..n_max, averaged over n_trials.
 *
 * noise_descriptor grammar: "none", "coherent:DELTA", "depolarizing:P",
 * "dephasing:GAMMA". Unitary noise runs on state vectors; the other channels
 * run on density matrices (n_q <= 7). The coherent Hamiltonian is drawn once
 * per run from seed stream prqc_mix_seed(seed, UINT64_MAX). */
PRQC_API prqc_status prqc_decay_run(prqc_source_kind source, uint32_t n_q, uint32_t m,
                                    const char* noise_descriptor, uint32_t n_max,
                                    uint64_t initial_basis, uint32_t n_trials, uint64_t seed,
                                    prqc_decay** out);

/* Number of rows (n_max + 1; row 0 is the n = 0 baseline). */
PRQC_API uint32_t prqc_decay_num_points(const prqc_decay* d);
PRQC_API prqc_status prqc_decay_point(const prqc_decay* d, uint32_t index, uint32_t* n_out,
                                      double* fidelity_mean, double* fidelity_std,
                                      double* purity_mean, double* purity_std);
PRQC_API void prqc_decay_free(prqc_decay* d);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRQC_H */
