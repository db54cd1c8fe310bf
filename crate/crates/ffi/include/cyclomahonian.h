#ifndef CYCLOMAHONIAN_H
#define CYCLOMAHONIAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum CmStatus {
  CM_STATUS_OK = 0,
  CM_STATUS_NULL_POINTER = 1,
  CM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * An enumeration or composition cap was exceeded.
   */
  CM_STATUS_RESOURCE_LIMIT = 3,
  CM_STATUS_INTERNAL = 4,
  /**
   * A Rust panic was caught at the boundary.
   */
  CM_STATUS_PANIC = 5,
} CmStatus;

/**
 * `A_n(t,q,p)` with integer coefficients.
 */
typedef struct CmPoly CmPoly;

/**
 * Reports from one verification run, in deterministic order.
 */
typedef struct CmReportList CmReportList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a success.
 *
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *cm_last_error(void);

/**
 * Enumerates `S_n` to build `A_n(t,q,p)`. `n` is at most 9, or 10 with `allow_n10`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum CmStatus cm_euler_mahonian(uint32_t n, bool allow_n10, uint32_t jobs, struct CmPoly **out);

/**
 * Renders `poly` as text; `m = 0` keeps `p` symbolic, otherwise `p = ξ_m`.
 *
 * # Safety
 * `poly` must come from [`cm_euler_mahonian`]; `out` must be writable.
 */
enum CmStatus cm_poly_render(const struct CmPoly *poly, uint32_t m, char **out);

/**
 * Number of nonzero terms of `poly`, written to `out`.
 *
 * # Safety
 * `poly` must come from [`cm_euler_mahonian`]; `out` must be writable.
 */
enum CmStatus cm_poly_term_count(const struct CmPoly *poly, size_t *out);

/**
 * # Safety
 * `poly` must come from [`cm_euler_mahonian`] and not be used afterwards; null is ignored.
 */
void cm_poly_free(struct CmPoly *poly);

/**
 * Runs the identity suites named in `suites` (comma-separated, or `all`).
 *
 * `m_set` points to `m_len` moduli; `ell_max` bounds the coefficient-extraction suite.
 *
 * # Safety
 * `suites` must be a NUL-terminated string, `m_set` must point to `m_len`
 * readable values, and `out` must be writable.
 */
enum CmStatus cm_verify(const char *suites,
                        uint32_t n_max,
                        const uint32_t *m_set,
                        size_t m_len,
                        uint32_t trunc,
                        uint32_t ell_max,
                        uint32_t jobs,
                        struct CmReportList **out);

/**
 * Number of reports in `list`; 0 for null.
 *
 * # Safety
 * `list` must come from [`cm_verify`] or be null.
 */
size_t cm_report_list_len(const struct CmReportList *list);

/**
 * Number of failing reports in `list`; 0 for null.
 *
 * # Safety
 * `list` must come from [`cm_verify`] or be null.
 */
size_t cm_report_list_failed(const struct CmReportList *list);

/**
 * One report as a single-line JSON object.
 *
 * # Safety
 * `list` must come from [`cm_verify`]; `out` must be writable.
 */
enum CmStatus cm_report_json(const struct CmReportList *list, size_t index, char **out);

/**
 * # Safety
 * `list` must come from [`cm_verify`] and not be used afterwards; null is ignored.
 */
void cm_report_list_free(struct CmReportList *list);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void cm_string_free(char *s);

/**
 * Library version as a static NUL-terminated string.
 */
const char *cm_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLOMAHONIAN_H */
