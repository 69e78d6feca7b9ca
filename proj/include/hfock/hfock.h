/* Copyright 2026 The hfock Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to hfock: Clifford-valued lattice functions, ladder operators,
 * vacuum and Fock states built from quasi-probability laws, potential
 * recovery, and the special functions behind those laws.
 *
 * Conventions:
 *  - Every function returns an hf_status; HF_OK is zero.
 *  - On failure hf_last_error() gives a message for the calling thread.
 *  - Objects are opaque handles released with their *_free function;
 *    passing NULL to a *_free function is allowed.
 *  - Strings returned through char** are owned by the caller and released
 *    with hf_string_free.
 *  - Handles are immutable after creation and may be shared across threads.
 */
#ifndef HFOCK_HFOCK_H_
#define HFOCK_HFOCK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(HFOCK_BUILDING_LIBRARY)
#define HF_API __attribute__((visibility("default")))
#else
#define HF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
  HF_OK = 0,
  HF_ERR_CONFIG = 1,       /* invalid input, schema violation */
  HF_ERR_DIMENSION = 2,    /* mismatched n */
  HF_ERR_NUMERIC = 3,      /* other numerical failure */
  HF_ERR_DOMAIN = 4,       /* field evaluated outside its domain, zero vacuum, bad radicand */
  HF_ERR_CONVERGENCE = 5,  /* series refused or did not converge */
  HF_ERR_POLE = 6,         /* Gamma pole in a numerator */
  HF_ERR_SEPARABILITY = 7, /* recovered field is not separable */
  HF_ERR_INTERNAL = 8
} hf_status;

#define HF_MAX_DIM 12

typedef struct hf_params {
  double mu;
  double q;
  double h;
  int n;
} hf_params;

/* Inclusive coordinate bounds per axis; only the first n entries are used. */
typedef struct hf_box {
  int n;
  int lo[HF_MAX_DIM];
  int hi[HF_MAX_DIM];
} hf_box;

typedef struct hf_multivector hf_multivector;
typedef struct hf_pin hf_pin;
typedef struct hf_distribution hf_distribution;
typedef struct hf_potentials hf_potentials;
typedef struct hf_lattice hf_lattice;
typedef struct hf_verify_report hf_verify_report;

HF_API const char* hf_version(void);
HF_API const char* hf_last_error(void);
HF_API const char* hf_status_name(hf_status status);
HF_API void hf_string_free(char* s);

/* Box [0, extent-1]^n. */
HF_API hf_box hf_box_quadrant(int n, int extent);

/* ---- Multivectors ---- */
HF_API hf_status hf_mv_create(int n, hf_multivector** out);
HF_API void hf_mv_free(hf_multivector* v);
HF_API hf_status hf_mv_set(hf_multivector* v, uint32_t blade, double re, double im);
HF_API hf_status hf_mv_get(const hf_multivector* v, uint32_t blade, double* re, double* im);
HF_API hf_status hf_mv_product(const hf_multivector* a, const hf_multivector* b, hf_multivector** out);
HF_API hf_status hf_mv_dagger(const hf_multivector* a, hf_multivector** out);
/* {"n": int, "coeffs": [[re, im], ...]} */
HF_API hf_status hf_mv_to_json(const hf_multivector* v, char** json);

/* ---- Pin elements ---- */
/* factors: `count` unit vectors with n real components each, row-major. */
HF_API hf_status hf_pin_from_vectors(int n, const double* factors, int count, hf_pin** out);
/* JSON array of factors, e.g. [[1, 0], [0.6, 0.8]]; [] is the identity. */
HF_API hf_status hf_pin_from_json(int n, const char* json, hf_pin** out);
HF_API void hf_pin_free(hf_pin* s);

/* ---- Distributions ---- */
/* spec_json: {"family": "poisson" | "hypergeometric" | "mittag_leffler" |
 * "wright_reduced" | "general_wright" | "eps_regularized", ...}. */
HF_API hf_status hf_distribution_create(const char* spec_json, const hf_params* params,
                                        hf_distribution** out);
HF_API void hf_distribution_free(hf_distribution* d);
/* h^n phi(x)^2 at integer coordinates k[0..n-1]. */
HF_API hf_status hf_distribution_likelihood(const hf_distribution* d, const int* k, double* re,
                                            double* im);
HF_API hf_status hf_distribution_normalizer(const hf_distribution* d, double* re, double* im);
HF_API hf_status hf_distribution_default_extent(const hf_distribution* d, int* extent);
HF_API hf_status hf_distribution_tail_bound(const hf_distribution* d, int extent, double* bound);
/* Likelihood tabulated on the box as a scalar lattice function. With
 * normalize_on_box the values are rescaled to sum to one over the box. */
HF_API hf_status hf_distribution_tabulate(const hf_distribution* d, const hf_box* box,
                                          int normalize_on_box, hf_lattice** out);
HF_API hf_status hf_distribution_potentials(const hf_distribution* d, hf_potentials** out);
/* Canonical JSON form of the spec (defaults filled in). */
HF_API hf_status hf_distribution_spec_json(const hf_distribution* d, char** json);

/* ---- Potentials ---- */
HF_API void hf_potentials_free(hf_potentials* p);
HF_API hf_status hf_potentials_magnetic(const hf_potentials* p, int axis, long k, double* re,
                                        double* im);
HF_API hf_status hf_potentials_electric(const hf_potentials* p, const int* k, double* re,
                                        double* im);
/* Tables on the box: {"n","h","magnetic":[{"k0","values"}],"electric":[{"k","value"}]}. */
HF_API hf_status hf_potentials_to_json(const hf_potentials* p, const hf_params* params,
                                       const hf_box* box, char** json);
HF_API hf_status hf_potentials_from_json(const char* json, hf_potentials** out);
/* Largest relative gap of the magnetic fields on k in [lo, hi] per axis. */
HF_API hf_status hf_potentials_compare(const hf_potentials* a, const hf_potentials* b, int n,
                                       long lo, long hi, double* gap);

/* ---- Lattice functions ---- */
HF_API void hf_lattice_free(hf_lattice* f);
HF_API hf_status hf_lattice_dim(const hf_lattice* f, int* n);
HF_API hf_status hf_lattice_support_size(const hf_lattice* f, size_t* count);
HF_API hf_status hf_lattice_get(const hf_lattice* f, const int* k, uint32_t blade, double* re,
                                double* im);
HF_API hf_status hf_lattice_l2_norm(const hf_lattice* f, double* norm);
/* ||f - g|| / max(||g||, 1e-14). */
HF_API hf_status hf_lattice_relative_difference(const hf_lattice* f, const hf_lattice* g,
                                                double* diff);
/* Lattice CSV: header, then k_1..k_n, blade_bitmask, re, im, sorted. */
HF_API hf_status hf_lattice_to_csv(const hf_lattice* f, char** csv);
/* meta_json may be NULL; it is stored verbatim under "meta". */
HF_API hf_status hf_lattice_to_json(const hf_lattice* f, const char* meta_json, char** json);
/* meta_out (optional) receives the "meta" object as JSON text. */
HF_API hf_status hf_lattice_from_json(const char* json, hf_lattice** out, char** meta_out);

/* ---- Vacuum, Fock states, quasi-monomials ---- */
/* phi = sqrt(L/h^n) on the box; psi0 = phi s. Either output may be NULL. */
HF_API hf_status hf_vacuum_from_distribution(const hf_distribution* d, const hf_box* box,
                                             const hf_pin* s, int normalize_on_box,
                                             hf_lattice** phi, hf_lattice** psi0);
/* phi from the recursion in the magnetic field, normalised on the box. */
HF_API hf_status hf_vacuum_from_potentials(const hf_potentials* p, const hf_params* params,
                                           const hf_box* box, const hf_pin* s, hf_lattice** phi,
                                           hf_lattice** psi0);
/* psi_k = (A^-)^k psi0, restricted to the box when box is not NULL. */
HF_API hf_status hf_fock_state(int k, const hf_lattice* psi0, const hf_potentials* p,
                               const hf_params* params, const hf_box* box, hf_lattice** out);
HF_API hf_status hf_apply_ladder(int sign, const hf_potentials* p, const hf_params* params,
                                 const hf_lattice* f, hf_lattice** out);
HF_API hf_status hf_apply_M(const hf_potentials* p, const hf_params* params, const hf_lattice* f,
                            hf_lattice** out);
/* m_k = M^k s on the box. */
HF_API hf_status hf_quasi_monomial(int k, const hf_potentials* p, const hf_params* params,
                                   const hf_pin* s, const hf_box* box, hf_lattice** out);
HF_API hf_status hf_quasi_monomial_even_multinomial(int r, const hf_potentials* p,
                                                    const hf_params* params, const hf_pin* s,
                                                    const hf_box* box, hf_lattice** out);
/* spec_json must describe a wright_reduced family (or poisson, read as alpha = gamma = 1). */
HF_API hf_status hf_quasi_monomial_even_wright(int r, const char* spec_json,
                                               const hf_params* params, const hf_pin* s,
                                               const hf_box* box, hf_lattice** out);
HF_API hf_status hf_m_from_psi(int k, const hf_lattice* psi, const hf_lattice* phi,
                               const hf_params* params, hf_lattice** out);
HF_API hf_status hf_psi_from_m(int k, const hf_lattice* m, const hf_lattice* phi,
                               const hf_params* params, hf_lattice** out);
HF_API hf_status hf_isospectral_residual(int k, const hf_potentials* p, const hf_params* params,
                                         const hf_lattice* phi, const hf_pin* s,
                                         const hf_box* box, double* residual);

/* ---- Inverse problem ---- */
/* excluded (optional) receives the number of points with a vanishing denominator. */
HF_API hf_status hf_recover_vacuum_projection(int k, const hf_lattice* psi, const hf_lattice* m,
                                              const hf_params* params, hf_lattice** phi,
                                              size_t* excluded);
HF_API hf_status hf_recover_potentials_from_vacuum(const hf_lattice* phi, const hf_params* params,
                                                   hf_potentials** out);
HF_API hf_status hf_recover_potentials_from_m1(const hf_lattice* m1, const hf_pin* s,
                                               const hf_params* params, int allow_complex,
                                               hf_potentials** out);

/* ---- Special functions ---- */
HF_API hf_status hf_gamma(double re, double im, double* out_re, double* out_im);
HF_API hf_status hf_mittag_leffler(double alpha, double beta, double z_re, double z_im,
                                   double* out_re, double* out_im);
/* request: {"function": "gamma" | "log_gamma" | "mittag_leffler" | "wright" |
 * "mellin_barnes" | "theta33" | "pochhammer", ...}; result:
 * {"value_re", "value_im", "verdict", "terms_used"}. See README. */
HF_API hf_status hf_specfun_eval(const char* request_json, char** result_json);

/* ---- Verification ---- */
/* spec_json may be NULL for Poisson. */
HF_API hf_status hf_verify_all(const char* spec_json, const hf_params* params, int extent,
                               uint64_t seed, hf_verify_report** out);
HF_API void hf_verify_report_free(hf_verify_report* r);
HF_API size_t hf_verify_report_size(const hf_verify_report* r);
/* Strings stay valid until the report is freed. */
HF_API hf_status hf_verify_report_entry(const hf_verify_report* r, size_t i, const char** suite,
                                        const char** check, double* residual, double* tolerance,
                                        int* pass, const char** note);
HF_API int hf_verify_report_passed(const hf_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif /* HFOCK_HFOCK_H_ */
