#ifndef PARAHESS_H
#define PARAHESS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PhStatus {
  PH_STATUS_OK = 0,
  PH_STATUS_NULL_POINTER = 1,
  PH_STATUS_INVALID_ARGUMENT = 2,
  PH_STATUS_DOMAIN = 3,
  PH_STATUS_PANIC = 4,
} PhStatus;

/**
 * A parabolic subset `J` of simple roots with its degree.
 */
typedef struct PhParabolic PhParabolic;

/**
 * A Jordan type `λ`.
 */
typedef struct PhPartition PhPartition;

/**
 * A polynomial with nonnegative integer coefficients.
 */
typedef struct PhPoly PhPoly;

/**
 * Both sides of the Hessenberg/Schubert-union comparison.
 */
typedef struct PhReport PhReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a
 * successful call. Valid until the next `ph_*` call on the same thread.
 */
const char *ph_last_error_message(void);

/**
 * Library version, a static NUL-terminated string.
 */
const char *ph_version(void);

/**
 * # Safety
 * `parts` points to `len` readable values; `out` is writable.
 */
enum PhStatus ph_partition_new(const size_t *parts, size_t len, struct PhPartition **out);

/**
 * Parses `"3,2,1"`.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum PhStatus ph_partition_parse(const char *text, struct PhPartition **out);

/**
 * # Safety
 * `p` is null or came from this library and is not used afterwards.
 */
void ph_partition_free(struct PhPartition *p);

/**
 * # Safety
 * `p` is a valid handle.
 */
size_t ph_partition_size(const struct PhPartition *p);

/**
 * `J ⊆ {1, ..., n-1}`.
 *
 * # Safety
 * `j` points to `len` readable values; `out` is writable.
 */
enum PhStatus ph_parabolic_new(size_t n, const size_t *j, size_t len, struct PhParabolic **out);

/**
 * # Safety
 * `p` is null or came from this library and is not used afterwards.
 */
void ph_parabolic_free(struct PhParabolic *p);

/**
 * Poincaré polynomial of `B(X, p_J)` counted cell by cell.
 *
 * # Safety
 * Handles are valid; `out` is writable.
 */
enum PhStatus ph_poincare_parabolic(const struct PhPartition *partition,
                                    const struct PhParabolic *parabolic,
                                    struct PhPoly **out);

/**
 * Poincaré polynomial of `B(X, H)` for any Hessenberg function.
 *
 * # Safety
 * `h` points to `len` readable values; handles are valid; `out` is writable.
 */
enum PhStatus ph_poincare_hessenberg(const struct PhPartition *partition,
                                     const size_t *h,
                                     size_t len,
                                     struct PhPoly **out);

/**
 * Number of stored coefficients, i.e. degree + 1, or 0 for the zero
 * polynomial.
 *
 * # Safety
 * `p` is a valid handle or null.
 */
size_t ph_poly_len(const struct PhPoly *p);

/**
 * Coefficient of `t^k`; 0 beyond the degree.
 *
 * # Safety
 * `p` is a valid handle or null.
 */
uint64_t ph_poly_coeff(const struct PhPoly *p, size_t k);

/**
 * # Safety
 * `p` is null or came from this library and is not used afterwards.
 */
void ph_poly_free(struct PhPoly *p);

/**
 * # Safety
 * Handles are valid; `out` is writable.
 */
enum PhStatus ph_verify_main_theorem(const struct PhPartition *partition,
                                     const struct PhParabolic *parabolic,
                                     struct PhReport **out);

/**
 * # Safety
 * `r` is a valid handle or null.
 */
bool ph_report_equal(const struct PhReport *r);

/**
 * # Safety
 * `r` is a valid handle or null.
 */
bool ph_report_in_hypothesis(const struct PhReport *r);

/**
 * Copies the Hessenberg side into a new polynomial handle.
 *
 * # Safety
 * `r` is a valid handle; `out` is writable.
 */
enum PhStatus ph_report_hessenberg_poly(const struct PhReport *r, struct PhPoly **out);

/**
 * Copies the Schubert-union side into a new polynomial handle.
 *
 * # Safety
 * `r` is a valid handle; `out` is writable.
 */
enum PhStatus ph_report_schubert_poly(const struct PhReport *r, struct PhPoly **out);

/**
 * # Safety
 * `r` is null or came from this library and is not used afterwards.
 */
void ph_report_free(struct PhReport *r);

/**
 * Writes the one-line form of the Schubert point `w_T` into `out_point`,
 * which must hold `n` values.
 *
 * # Safety
 * `one_line` holds `n` readable values and `out_point` `n` writable ones.
 */
enum PhStatus ph_schubert_point(const struct PhPartition *partition,
                                const size_t *one_line,
                                size_t n,
                                size_t *out_point);

/**
 * # Safety
 * `one_line` holds `n` readable values; `out_dim` is writable.
 */
enum PhStatus ph_springer_cell_dim(const struct PhPartition *partition,
                                   const size_t *one_line,
                                   size_t n,
                                   size_t *out_dim);

/**
 * Runs the comma-separated checks (or `"all"`) for every degree up to
 * `n_max` and writes the total number of failures.
 *
 * # Safety
 * `checks` is a NUL-terminated string; `out_failures` is writable.
 */
enum PhStatus ph_run_checks(size_t n_max, const char *checks, size_t *out_failures);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARAHESS_H */
