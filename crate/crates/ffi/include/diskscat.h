#ifndef DISKSCAT_H
#define DISKSCAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum DsStatus {
  DS_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  DS_STATUS_NULL_POINTER = 1,
  /**
   * Invalid parameters or indices.
   */
  DS_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Malformed, missing or mismatched data.
   */
  DS_STATUS_DATA_ERROR = 3,
  /**
   * A numerical check or solver failed.
   */
  DS_STATUS_NUMERICAL_ERROR = 4,
  /**
   * An internal panic was caught.
   */
  DS_STATUS_PANIC = 5,
} DsStatus;

/**
 * PSWF basis.
 */
typedef struct DsBasis DsBasis;

/**
 * Contrast on a Cartesian grid.
 */
typedef struct DsContrast DsContrast;

/**
 * Far-field matrix.
 */
typedef struct DsFarField DsFarField;

/**
 * Processed data on a polar grid.
 */
typedef struct DsProcessed DsProcessed;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *ds_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ds_version(void);

/**
 * Build the disk PSWF basis for bandwidth `c`, `m <= max_m`, `n <= max_n`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum DsStatus ds_basis_build(double c, size_t max_m, size_t max_n, struct DsBasis **out);

/**
 * Read a PSWF1 basis cache.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` writable.
 */
enum DsStatus ds_basis_load(const char *path, struct DsBasis **out);

/**
 * Write a PSWF1 basis cache.
 *
 * # Safety
 * `basis` must be a live handle and `path` a NUL-terminated string.
 */
enum DsStatus ds_basis_save(const struct DsBasis *basis, const char *path);

/**
 * Number of `(m, n, l)` entries, or 0 for a null handle.
 *
 * # Safety
 * `basis` must be null or a live handle.
 */
size_t ds_basis_len(const struct DsBasis *basis);

/**
 * Prolate eigenvalue `alpha_{m,n}` and Sturm–Liouville eigenvalue
 * `chi_{m,n}`.
 *
 * # Safety
 * `basis` must be a live handle; the output pointers must be writable.
 */
enum DsStatus ds_basis_eigenvalues(const struct DsBasis *basis,
                                   size_t m,
                                   size_t n,
                                   double *alpha_re,
                                   double *alpha_im,
                                   double *chi);

/**
 * Release a basis; null is ignored.
 *
 * # Safety
 * `basis` must be null or a handle not yet freed.
 */
void ds_basis_free(struct DsBasis *basis);

/**
 * Contrast from `n * n` row-major cell values on `[-1, 1]^2`.
 *
 * # Safety
 * `values` must point to `n * n` readable doubles and `out` be writable.
 */
enum DsStatus ds_contrast_new(size_t n, const double *values, struct DsContrast **out);

/**
 * Read a CGR1 contrast.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` writable.
 */
enum DsStatus ds_contrast_load(const char *path, struct DsContrast **out);

/**
 * Write a CGR1 contrast.
 *
 * # Safety
 * `q` must be a live handle and `path` a NUL-terminated string.
 */
enum DsStatus ds_contrast_save(const struct DsContrast *q, const char *path);

/**
 * Grid size `N`, or 0 for a null handle.
 *
 * # Safety
 * `q` must be null or a live handle.
 */
size_t ds_contrast_n(const struct DsContrast *q);

/**
 * Copy the `N * N` values into `buf` (of length `len`).
 *
 * # Safety
 * `q` must be a live handle and `buf` writable for `len` doubles.
 */
enum DsStatus ds_contrast_values(const struct DsContrast *q, double *buf, size_t len);

/**
 * Release a contrast; null is ignored.
 *
 * # Safety
 * `q` must be null or a handle not yet freed.
 */
void ds_contrast_free(struct DsContrast *q);

/**
 * Full and Born far fields for `directions` uniform incident and
 * observation directions, plus the degree of nonlinearity (`rel` may be
 * null; it is NaN for a zero contrast).
 *
 * # Safety
 * `q` must be a live handle; `full` and `born` writable.
 */
enum DsStatus ds_simulate(const struct DsContrast *q,
                          double k,
                          size_t directions,
                          struct DsFarField **full,
                          struct DsFarField **born,
                          double *rel);

/**
 * Read an FFM1 far-field matrix.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` writable.
 */
enum DsStatus ds_farfield_load(const char *path, struct DsFarField **out);

/**
 * Write an FFM1 far-field matrix.
 *
 * # Safety
 * `ff` must be a live handle and `path` a NUL-terminated string.
 */
enum DsStatus ds_farfield_save(const struct DsFarField *ff, const char *path);

/**
 * Observation and incidence counts.
 *
 * # Safety
 * `ff` must be a live handle; outputs writable.
 */
enum DsStatus ds_farfield_shape(const struct DsFarField *ff, size_t *n_obs, size_t *n_inc);

/**
 * Copy the observation-major entries into `re` and `im` (length `len`).
 *
 * # Safety
 * `ff` must be a live handle; `re`, `im` writable for `len` doubles.
 */
enum DsStatus ds_farfield_values(const struct DsFarField *ff, double *re, double *im, size_t len);

/**
 * Copy with multiplicative noise of level `delta` drawn from `seed`.
 *
 * # Safety
 * `ff` must be a live handle and `out` writable.
 */
enum DsStatus ds_farfield_add_noise(const struct DsFarField *ff,
                                    double delta,
                                    uint64_t seed,
                                    struct DsFarField **out);

/**
 * Copy restricted to the aperture `[-theta, theta]`.
 *
 * # Safety
 * `ff` must be a live handle and `out` writable.
 */
enum DsStatus ds_farfield_limit_aperture(const struct DsFarField *ff,
                                         double theta,
                                         struct DsFarField **out);

/**
 * Release a far-field matrix; null is ignored.
 *
 * # Safety
 * `ff` must be null or a handle not yet freed.
 */
void ds_farfield_free(struct DsFarField *ff);

/**
 * Process a far-field matrix onto the `n2 x n1` polar grid.
 *
 * # Safety
 * `ff` must be a live handle and `out` writable.
 */
enum DsStatus ds_process(const struct DsFarField *ff,
                         size_t n1,
                         size_t n2,
                         struct DsProcessed **out);

/**
 * Read PRC1 processed data.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` writable.
 */
enum DsStatus ds_processed_load(const char *path, struct DsProcessed **out);

/**
 * Write PRC1 processed data.
 *
 * # Safety
 * `u` must be a live handle and `path` a NUL-terminated string.
 */
enum DsStatus ds_processed_save(const struct DsProcessed *u, const char *path);

/**
 * Bandwidth, angular and radial node counts.
 *
 * # Safety
 * `u` must be a live handle; outputs writable.
 */
enum DsStatus ds_processed_shape(const struct DsProcessed *u, double *c, size_t *n1, size_t *n2);

/**
 * Copy the radial-major values into `re` and `im` (length `len`).
 *
 * # Safety
 * `u` must be a live handle; `re`, `im` writable for `len` doubles.
 */
enum DsStatus ds_processed_values(const struct DsProcessed *u, double *re, double *im, size_t len);

/**
 * Release processed data; null is ignored.
 *
 * # Safety
 * `u` must be null or a handle not yet freed.
 */
void ds_processed_free(struct DsProcessed *u);

/**
 * Low-rank reconstruction over `|alpha| > eta` on an `n x n` grid (real
 * part).
 *
 * # Safety
 * `u` and `basis` must be live handles and `out` writable.
 */
enum DsStatus ds_invert_eta(const struct DsProcessed *u,
                            const struct DsBasis *basis,
                            double eta,
                            size_t n,
                            struct DsContrast **out);

/**
 * Reconstruction over `chi < 1 / alpha_reg`; `beta` (may be null)
 * receives the smallest retained `|alpha|`.
 *
 * # Safety
 * `u` and `basis` must be live handles and `out` writable.
 */
enum DsStatus ds_invert_sl(const struct DsProcessed *u,
                           const struct DsBasis *basis,
                           double alpha_reg,
                           size_t n,
                           struct DsContrast **out,
                           double *beta);

/**
 * Processed data from raw radial-major values, for data produced outside
 * the library (for example by a learned corrector). `aperture <= 0`
 * means full aperture.
 *
 * # Safety
 * `re` and `im` must be readable for `n1 * n2` doubles and `out` writable.
 */
enum DsStatus ds_processed_new(double c,
                               size_t n1,
                               size_t n2,
                               double aperture,
                               const double *re,
                               const double *im,
                               struct DsProcessed **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DISKSCAT_H */
