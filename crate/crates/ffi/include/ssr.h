#ifndef SSR_H
#define SSR_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum {
  SSR_STATUS_OK = 0,
  /**
   * A report was produced but one of its checks failed; the report is still returned.
   */
  SSR_STATUS_CHECK_FAILED = 1,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  SSR_STATUS_NULL_OR_INVALID_ARGUMENT = 2,
  /**
   * Malformed or inconsistent input: bad JSON, wrong field, wrong dimensions, and so on.
   */
  SSR_STATUS_INVALID_INPUT = 3,
  /**
   * A mathematical invariant failed while computing.
   */
  SSR_STATUS_INVARIANT_FAILURE = 4,
  /**
   * The library panicked; this is a bug.
   */
  SSR_STATUS_INTERNAL = 5,
} SsrStatus;

/**
 * A JSON report with its overall verdict.
 */
typedef struct SsrReport SsrReport;

/**
 * A representation loaded and validated against its field.
 */
typedef struct SsrRepr SsrRepr;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *ssr_version(void);

/**
 * Message for the last failing call on this thread; empty after a success.
 * Valid until the next call on this thread.
 */
const char *ssr_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ssr_string_free(char *s);

/**
 * Builds a shipped construction. `params_json` may be null; `field` is `Q`, `F7`, `Fp:7`, ...
 *
 * # Safety
 * Strings must be null-terminated; `out` must be writable.
 */
SsrStatus ssr_construct(const char *id, const char *params_json, const char *field, SsrRepr **out);

/**
 * Loads a representation from its JSON form. `field` may be null to use the stored one.
 *
 * # Safety
 * Strings must be null-terminated; `out` must be writable.
 */
SsrStatus ssr_repr_from_json(const char *json, const char *field, SsrRepr **out);

/**
 * The representation as JSON; free with [`ssr_string_free`]. Null on a null handle.
 *
 * # Safety
 * `r` must be a live handle or null.
 */
char *ssr_repr_to_json(const SsrRepr *r);

/**
 * Dimension of the symplectic space, or 0 on a null handle.
 *
 * # Safety
 * `r` must be a live handle or null.
 */
uintptr_t ssr_repr_dim(const SsrRepr *r);

/**
 * Dimension of the acting algebra, or 0 on a null handle.
 *
 * # Safety
 * `r` must be a live handle or null.
 */
uintptr_t ssr_repr_algebra_dim(const SsrRepr *r);

/**
 * # Safety
 * `r` must come from this library and not have been freed. Null is ignored.
 */
void ssr_repr_free(SsrRepr *r);

/**
 * Checks every axiom on basis vectors.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
SsrStatus ssr_verify(const SsrRepr *r, bool normalizer, SsrReport **out);

/**
 * Covariants and identities at a vector.
 *
 * # Safety
 * `r` must be a live handle; strings null-terminated; `out` writable.
 */
SsrStatus ssr_covariants(const SsrRepr *r, const char *vector, uint64_t seed, SsrReport **out);

/**
 * Splits a vector into two null summands; with `lambda` non-null, over `k[√λ]`.
 *
 * # Safety
 * `r` must be a live handle; strings null-terminated; `out` writable.
 */
SsrStatus ssr_decompose(const SsrRepr *r, const char *vector, const char *lambda, SsrReport **out);

/**
 * Sample points with the same moment as a vector.
 *
 * # Safety
 * `r` must be a live handle; strings null-terminated; `out` writable.
 */
SsrStatus ssr_fiber(const SsrRepr *r, const char *vector, uintptr_t samples, SsrReport **out);

/**
 * The operator syzygy at a vector; with `point` non-null also the classical binary-cubic one.
 *
 * # Safety
 * `r` must be a live handle; strings null-terminated; `out` writable.
 */
SsrStatus ssr_syzygy(const SsrRepr *r, const char *vector, const char *point, SsrReport **out);

/**
 * Graded Lie algebra with Jacobi, simplicity and round-trip checks.
 *
 * # Safety
 * `r` must be a live handle; `out` writable.
 */
SsrStatus ssr_lie_build(const SsrRepr *r, bool constants, uint64_t seed, SsrReport **out);

/**
 * Chart maps: `op` is `alpha`, `beta`, `act` or `mu-hat`; `scalar` (`[a, b]`) is
 * only read by `act` and may be null otherwise.
 *
 * # Safety
 * `r` must be a live handle; strings null-terminated; `out` writable.
 */
SsrStatus ssr_chart(const SsrRepr *r,
                    const char *op,
                    const char *lambda,
                    const char *point,
                    const char *scalar,
                    SsrReport **out);

/**
 * Seeded invariant sweep over every construction.
 *
 * # Safety
 * `field` null-terminated; `out` writable.
 */
SsrStatus ssr_selftest(const char *field, uint64_t seed, uintptr_t samples, SsrReport **out);

/**
 * Whether every check in the report held.
 *
 * # Safety
 * `rep` must be a live handle or null.
 */
bool ssr_report_passed(const SsrReport *rep);

/**
 * The report as JSON; free with [`ssr_string_free`]. Null on a null handle.
 *
 * # Safety
 * `rep` must be a live handle or null.
 */
char *ssr_report_json(const SsrReport *rep);

/**
 * # Safety
 * `rep` must come from this library and not have been freed. Null is ignored.
 */
void ssr_report_free(SsrReport *rep);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SSR_H */
