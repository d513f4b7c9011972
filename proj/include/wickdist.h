/* SPDX-License-Identifier: Apache-2.0 */
#ifndef WICKDIST_H
#define WICKDIST_H

/*
 * C API for computing Wick-violation measures and interaction distances of
 * diagonal entanglement Hamiltonians, with an exact-diagonalization pipeline
 * for a spinless-fermion chain.
 *
 * Conventions:
 *   - Mode and site indices are zero-based.
 *   - Occupation labels are bitmasks (bit i = mode i). In text form the
 *     leftmost character of a label is mode 0.
 *   - Every function returns a wd_status; results travel through out
 *     parameters. On failure, wd_last_error() describes the problem for the
 *     calling thread.
 *   - Objects returned through wd_*_create/compute calls are owned by the
 *     caller and released with the matching wd_*_destroy.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(WICKDIST_BUILD)
#define WD_API __declspec(dllexport)
#else
#define WD_API __declspec(dllimport)
#endif
#else
#define WD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wd_status {
  WD_OK = 0,
  WD_ERR_INVALID_ARGUMENT = 1,
  WD_ERR_CAPACITY = 2,
  WD_ERR_MALFORMED_SPECTRUM = 3,
  WD_ERR_UNSUPPORTED_MODEL = 4,
  WD_ERR_AMBIGUOUS_LABEL = 5,
  WD_ERR_LABEL_COLLISION = 6,
  WD_ERR_IO = 7,
  WD_ERR_PARSE = 8,
  WD_ERR_INTERNAL = 9
} wd_status;

typedef enum wd_method {
  WD_METHOD_EXACT = 0,
  WD_METHOD_TWO_MODE_CLOSED = 1,
  WD_METHOD_PERTURBATIVE = 2,
  WD_METHOD_DIRECT_CORRELATOR = 3
} wd_method;

typedef enum wd_boundary {
  WD_BOUNDARY_OPEN = 0,
  WD_BOUNDARY_PERIODIC = 1
} wd_boundary;

typedef struct wd_mode_energies wd_mode_energies;
typedef struct wd_spectrum wd_spectrum;
typedef struct wd_wick_report wd_wick_report;
typedef struct wd_fit_result wd_fit_result;
typedef struct wd_ed_result wd_ed_result;

/* Library version string ("major.minor.patch"). */
WD_API const char* wd_version(void);

/* Message for the most recent failure on the calling thread; never NULL. */
WD_API const char* wd_last_error(void);

/* ---- mode energies ------------------------------------------------------ */

WD_API wd_status wd_mode_energies_create(int n_modes, wd_mode_energies** out);
WD_API void wd_mode_energies_destroy(wd_mode_energies* m);

WD_API wd_status wd_mode_energies_set_e0(wd_mode_energies* m, double e0);
WD_API wd_status wd_mode_energies_set_single(wd_mode_energies* m, int k, double eps);
WD_API wd_status wd_mode_energies_set_pair(wd_mode_energies* m, int i, int j, double eps);
/* Routes by popcount: 1 bit -> single, 2 bits -> pair, >= 3 bits -> higher. */
WD_API wd_status wd_mode_energies_set_subset(wd_mode_energies* m, uint32_t mask, double eps);

WD_API wd_status wd_mode_energies_n_modes(const wd_mode_energies* m, int* out);
WD_API wd_status wd_mode_energies_get_e0(const wd_mode_energies* m, double* out);
WD_API wd_status wd_mode_energies_get_single(const wd_mode_energies* m, int k, double* out);
WD_API wd_status wd_mode_energies_get_pair(const wd_mode_energies* m, int i, int j, double* out);
WD_API wd_status wd_mode_energies_get_subset(const wd_mode_energies* m, uint32_t mask,
                                             double* out);

/* ---- free models -------------------------------------------------------- */

/* Z = prod_i (1 + e^{-eps[i]}). */
WD_API wd_status wd_free_partition_function(const double* eps, int n, double* out);

/* <n_k> = 1 / (1 + e^{eps_k}). */
WD_API wd_status wd_free_occupation(double eps_k, double* out);

/* ---- spectra ------------------------------------------------------------ */

WD_API wd_status wd_spectrum_from_mode_energies(const wd_mode_energies* m, int normalize,
                                                wd_spectrum** out);
WD_API wd_status wd_spectrum_to_mode_energies(const wd_spectrum* s, wd_mode_energies** out);
WD_API wd_status wd_spectrum_read(const char* path, wd_spectrum** out);
WD_API wd_status wd_spectrum_write(const wd_spectrum* s, const char* path);
WD_API wd_status wd_spectrum_normalize(wd_spectrum* s);
WD_API void wd_spectrum_destroy(wd_spectrum* s);

WD_API wd_status wd_spectrum_level_count(const wd_spectrum* s, size_t* out);
WD_API wd_status wd_spectrum_n_modes(const wd_spectrum* s, int* out);
WD_API wd_status wd_spectrum_is_normalized(const wd_spectrum* s, int* out);
/* Any out pointer may be NULL. `has_label`/`label` describe the level's
 * occupation pattern, `clamped` flags levels held at the eigenvalue floor. */
WD_API wd_status wd_spectrum_level(const wd_spectrum* s, size_t index, double* energy,
                                   double* probability, int* has_label, uint32_t* label,
                                   int* clamped);

/* ---- exact Gibbs expectations ------------------------------------------- */

WD_API wd_status wd_exact_partition_function(const wd_mode_energies* m, double* out);
WD_API wd_status wd_exact_occupation(const wd_mode_energies* m, int k, double* out);
WD_API wd_status wd_exact_pair_occupation(const wd_mode_energies* m, int k, int l, double* out);

/* ---- Wick violations ---------------------------------------------------- */

WD_API wd_status wd_violation_exact(const wd_mode_energies* m, int i, int j, double* out);

/* Closed form on the two-mode level energies {0, e1, e2, e12}. as_printed
 * selects a diagnostic variant differing by a factor e^{-e12}. */
WD_API wd_status wd_violation_two_mode_closed(double e1, double e2, double e12, int as_printed,
                                              double* out);

WD_API wd_status wd_perturbative_occupation(const wd_mode_energies* m, int k, double* out);
WD_API wd_status wd_perturbative_pair_occupation(const wd_mode_energies* m, int k, int l,
                                                 double* out);
WD_API wd_status wd_violation_perturbative(const wd_mode_energies* m, int i, int j, double* out);

WD_API wd_status wd_wick_report_compute(const wd_mode_energies* m, wd_method method,
                                        int as_printed, wd_wick_report** out);
WD_API void wd_wick_report_destroy(wd_wick_report* r);
WD_API wd_status wd_wick_report_n_modes(const wd_wick_report* r, int* out);
WD_API wd_status wd_wick_report_method(const wd_wick_report* r, wd_method* out);
WD_API wd_status wd_wick_report_w_max(const wd_wick_report* r, double* out);
WD_API wd_status wd_wick_report_pair(const wd_wick_report* r, int i, int j, double* out);

/* ---- interaction distance ----------------------------------------------- */

typedef struct wd_fit_options {
  int restarts;            /* multi-start count, default 16 */
  long long max_evals;     /* per restart; 0 means 200 * n_modes */
  double tol;              /* simplex convergence threshold, default 1e-10 */
  uint64_t seed;           /* seeds the restart perturbations, default 12345 */
} wd_fit_options;

WD_API void wd_fit_options_init(wd_fit_options* opt);

/* 1/2 sum |p_(k) - q_(k)|, both lists sorted descending, shorter zero-padded. */
WD_API wd_status wd_trace_distance_diagonal(const double* p, size_t np, const double* q,
                                            size_t nq, double* out);

WD_API wd_status wd_fit_free_spectrum(const wd_spectrum* s, int n_modes,
                                      const wd_fit_options* opt, wd_fit_result** out);
WD_API void wd_fit_result_destroy(wd_fit_result* f);
WD_API wd_status wd_fit_result_d_f(const wd_fit_result* f, double* out);
WD_API wd_status wd_fit_result_e0(const wd_fit_result* f, double* out);
WD_API wd_status wd_fit_result_n_modes(const wd_fit_result* f, int* out);
/* Copies the fitted single-mode energies (ascending) into eps[0..cap). */
WD_API wd_status wd_fit_result_eps(const wd_fit_result* f, double* eps, size_t cap);
WD_API wd_status wd_fit_result_stats(const wd_fit_result* f, long long* objective_evals,
                                     int* restarts_used, int* converged);

/* ok = (w_max <= 6 d_f + tol); slack = 6 d_f - w_max. tol <= 0 uses 1e-6. */
WD_API wd_status wd_check_bound(double w_max, double d_f, double tol, int* ok, double* slack);

/* ---- exact diagonalization pipeline ------------------------------------- */

typedef struct wd_ed_model {
  int length;                /* sites, <= 14 */
  int filling;               /* particle number */
  double hopping;            /* t */
  double interaction;        /* V, nearest neighbor */
  double chemical_potential; /* mu */
  int boundary;              /* wd_boundary */
  int cut;                   /* left-block size; 0 means length / 2 */
} wd_ed_model;

WD_API void wd_ed_model_init(wd_ed_model* model);

/* Runs diagonalization, reduced state, spectra, labeling, direct correlators,
 * the free fit (opt may be NULL for defaults), and the bound check. */
WD_API wd_status wd_ed_run(const wd_ed_model* model, const wd_fit_options* opt,
                           wd_ed_result** out);
WD_API void wd_ed_result_destroy(wd_ed_result* r);

WD_API wd_status wd_ed_result_ground_energy(const wd_ed_result* r, double* out);
WD_API wd_status wd_ed_result_gap(const wd_ed_result* r, double* gap, int* warning);
/* The unlabeled spectrum (probability-descending). */
WD_API wd_status wd_ed_result_spectrum(const wd_ed_result* r, wd_spectrum** out);
/* The labeled spectrum (label-ascending); fails when labeling failed. */
WD_API wd_status wd_ed_result_labeled_spectrum(const wd_ed_result* r, wd_spectrum** out);
WD_API wd_status wd_ed_result_labeling(const wd_ed_result* r, int* ok, const char** message);
/* Subset energies recovered from the labeled spectrum; fails when labeling
 * failed. */
WD_API wd_status wd_ed_result_mode_energies(const wd_ed_result* r, wd_mode_energies** out);
/* Additivity audit of the labeled spectrum: max_certified is the largest
 * |mixed second energy difference| over mode pairs whose four probed levels
 * all clear the reliability floor; certified/uncertified count those pairs.
 * Any out pointer may be NULL. Fails when labeling failed. */
WD_API wd_status wd_ed_result_pair_additivity(const wd_ed_result* r, double* max_certified,
                                              int* certified, int* uncertified);
/* Correlators measured in the natural-orbital basis of rho_A (diagnostic). */
WD_API wd_status wd_ed_result_direct_report(const wd_ed_result* r, wd_wick_report** out);
/* Correlators in the fitted free model's mode labels; this is the w_max the
 * 6 d_f bound certifies. */
WD_API wd_status wd_ed_result_fit_label_report(const wd_ed_result* r, wd_wick_report** out);
WD_API wd_status wd_ed_result_fit(const wd_ed_result* r, wd_fit_result** out);
/* Copies the natural-orbital occupations (descending) into nu[0..cap). */
WD_API wd_status wd_ed_result_natural_occupations(const wd_ed_result* r, double* nu, size_t cap,
                                                  int* degenerate);
WD_API wd_status wd_ed_result_residuals(const wd_ed_result* r, double* full_wick_max,
                                        double* anomalous_max);
WD_API wd_status wd_ed_result_bound(const wd_ed_result* r, double tol, int* ok, double* slack);
WD_API wd_status wd_ed_result_clamped_count(const wd_ed_result* r, int* out);

#ifdef __cplusplus
}
#endif

#endif /* WICKDIST_H */
