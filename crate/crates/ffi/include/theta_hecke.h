#ifndef THETA_HECKE_H
#define THETA_HECKE_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ThStatus {
  TH_STATUS_OK = 0,
  TH_STATUS_NULL_ARGUMENT = 1,
  TH_STATUS_INVALID_UTF8 = 2,
  TH_STATUS_PARSE_ERROR = 3,
  TH_STATUS_INVALID_ARGUMENT = 4,
  TH_STATUS_MATH_ERROR = 5,
  TH_STATUS_VERIFY_FAILED = 6,
  TH_STATUS_PANIC = 7,
} ThStatus;

/**
 * The affine Hecke algebra of a fixed rank.
 */
typedef struct ThAlgebra ThAlgebra;

/**
 * A Laurent polynomial: in `x1..xm, s` for rank `m ≥ 1`, in `g, s` for rank 0.
 */
typedef struct ThPoly ThPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. Valid until the next call.
 */
const char *th_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void th_string_free(char *s);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum ThStatus th_algebra_new(size_t m, struct ThAlgebra **out);

/**
 * # Safety
 * `alg` must be NULL or a handle from `th_algebra_new` not yet freed.
 */
void th_algebra_free(struct ThAlgebra *alg);

/**
 * Rank of the algebra, 0 for NULL.
 *
 * # Safety
 * `alg` must be NULL or a live handle.
 */
size_t th_algebra_rank(const struct ThAlgebra *alg);

/**
 * Evaluate a mixed expression and write its canonical form to `out`.
 *
 * # Safety
 * `alg` must be a live handle, `expr` a nul-terminated string, `out` writable.
 */
enum ThStatus th_eval(const struct ThAlgebra *alg, const char *expr, char **out);

/**
 * Parse a polynomial; rank 0 selects `ℤ[g^±, s^±]`.
 *
 * # Safety
 * `src` must be a nul-terminated string and `out` writable.
 */
enum ThStatus th_poly_parse(size_t rank, const char *src, struct ThPoly **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void th_poly_free(struct ThPoly *p);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ThStatus th_poly_to_string(const struct ThPoly *p, char **out);

/**
 * Act by the Hecke element `hecke` on a polynomial of the same rank.
 *
 * # Safety
 * `alg` and `p` must be live handles, `hecke` a nul-terminated string, `out` writable.
 */
enum ThStatus th_poly_act(const struct ThAlgebra *alg,
                          const char *hecke,
                          const struct ThPoly *p,
                          struct ThPoly **out);

/**
 * Run a verification suite and write the JSON report.
 *
 * Returns `TH_STATUS_VERIFY_FAILED` with the report still written when a check fails.
 *
 * # Safety
 * `suite` must be a nul-terminated string and `out` writable.
 */
enum ThStatus th_verify_json(const char *suite,
                             size_t m_min,
                             size_t m_max,
                             uint64_t seed,
                             char **out);

/**
 * Matrix of a Hecke element on the theorem basis as JSON; NULL `generator` means `T_{s_m}`.
 *
 * # Safety
 * `generator` must be NULL or a nul-terminated string, `out` writable.
 */
enum ThStatus th_springer_matrix_json(size_t m, const char *generator, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THETA_HECKE_H */
