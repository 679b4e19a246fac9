/* discsieve: exact-arithmetic experiments on discriminants of monic integer
 * polynomials - squarefree/maximality densities, the symmetric-matrix
 * embedding and its Q-invariant, and quasi-reduced-lattice counting.
 *
 * C interface to the shared library. All functions returning ds_status set a
 * thread-local error message retrievable via ds_last_error() on failure.
 * Strings returned through char** are heap-allocated by the library and must
 * be released with ds_string_free().
 */
#ifndef DISCSIEVE_H
#define DISCSIEVE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ds_status {
    DS_OK = 0,
    DS_ERR_INVALID = 2, /* validation error: bad input, domain violation */
    DS_ERR_BUDGET = 3,  /* enumeration work exceeds the configured budget */
    DS_ERR_INTERNAL = 4
} ds_status;

/* Opaque monic integer polynomial x^n + a_1 x^{n-1} + ... + a_n. */
typedef struct ds_poly ds_poly;

/* Accepts "x^3 - 1*x^2 + 3*x + 9" or the compact array form "[-1,3,9]". */
ds_status ds_poly_parse(const char* text, ds_poly** out);
void ds_poly_free(ds_poly* p);
int ds_poly_degree(const ds_poly* p);
ds_status ds_poly_format(const ds_poly* p, char** out_text);
ds_status ds_poly_coeffs_json(const ds_poly* p, char** out_json);

void ds_string_free(char* s);
const char* ds_last_error(void);
const char* ds_version(void);

/* p^2-divisibility class of disc(f): JSON {tag, witness}. */
ds_status ds_classify(const ds_poly* f, uint64_t p, char** out_json);

/* Weak normal form at squarefree m and the symmetric-matrix embedding:
 * JSON {ell, c, matrix:{n,d,S}, invariant_poly, Q, absQ}. */
ds_status ds_embed(const ds_poly* f, int64_t m, char** out_json);

/* Q-invariant of a W0 matrix given as {"n":..,"d":..,"S":[row-major ints]}:
 * JSON {Q, absQ}. */
ds_status ds_qinv(const char* matrix_json, char** out_json);

/* Local density at (n, p): closed-form lambda_n(p) and, optionally, the
 * exhaustive mod-p^2 oracle; a1_zero switches to the vanishing-x^{n-1}
 * family (no closed form; oracle only). */
ds_status ds_local_density(int n, uint64_t p, int a1_zero, int with_oracle, char** out_json);

/* Experiment runner. kind is one of: "density", "maximal", "sieve-check",
 * "tail", "reducible", "c3vol", "monogenic", "qrfrac". params_json is an
 * object with the applicable keys among {n, X, Y, thresholds, samples,
 * truncation, seed, threads, prime_bound, no_timing}. Returns the report as
 * JSON. */
ds_status ds_experiment(const char* kind, const char* params_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
