#ifndef QTAU_H
#define QTAU_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QtauCorrelationMode {
  QTAU_CORRELATION_MODE_DET = 0,
  QTAU_CORRELATION_MODE_SKEW_SUM = 1,
} QtauCorrelationMode;

typedef enum QtauQScalarMode {
  QTAU_Q_SCALAR_MODE_HL_SUM = 0,
  QTAU_Q_SCALAR_MODE_DET_QUOTIENT = 1,
  QTAU_Q_SCALAR_MODE_BIG_SCHUR = 2,
  QTAU_Q_SCALAR_MODE_TWISTED_SCHUR = 3,
} QtauQScalarMode;

/**
 * Which closed form to evaluate for the phase-chain scalar product.
 */
typedef enum QtauScalarMode {
  QTAU_SCALAR_MODE_DET = 0,
  QTAU_SCALAR_MODE_SCHUR_SUM = 1,
} QtauScalarMode;

/**
 * Result codes. Zero is success.
 */
typedef enum QtauStatus {
  QTAU_STATUS_OK = 0,
  QTAU_STATUS_NULL_POINTER = 1,
  QTAU_STATUS_INVALID_ARGUMENT = 2,
  QTAU_STATUS_PARSE = 3,
  QTAU_STATUS_SIZE_CAP = 4,
  QTAU_STATUS_SINGULAR = 5,
  QTAU_STATUS_NO_CONVERGENCE = 6,
  QTAU_STATUS_UNSUPPORTED = 7,
  QTAU_STATUS_INTERNAL = 8,
} QtauStatus;

/**
 * Opaque occupation-basis chain used for brute-force pairings.
 */
typedef struct QtauChain QtauChain;

/**
 * Opaque set of exact spectral points.
 */
typedef struct QtauPointSet QtauPointSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library; valid until the next failing call on the same thread.
 */
const char *qtau_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *qtau_version(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qtau_string_free(char *s);

/**
 * Parses a comma-separated list of rationals such as `"1/2,-3,2/5"`.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum QtauStatus qtau_points_parse(const char *text, struct QtauPointSet **out);

/**
 * Number of points, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t qtau_points_len(const struct QtauPointSet *p);

/**
 * # Safety
 * `p` must be null or a handle from [`qtau_points_parse`] not yet freed.
 */
void qtau_points_free(struct QtauPointSet *p);

/**
 * Phase-chain scalar product over the `[N, M]` box, `N = |x| = |y|`.
 *
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
enum QtauStatus qtau_scalar_product(const struct QtauPointSet *x,
                                    const struct QtauPointSet *y,
                                    size_t m,
                                    enum QtauScalarMode mode,
                                    char **out);

/**
 * q-boson scalar product; `q` is a rational string.
 *
 * # Safety
 * Handles must be live; `q` a valid C string; `out` a valid pointer.
 */
enum QtauStatus qtau_scalar_product_q(const struct QtauPointSet *x,
                                      const struct QtauPointSet *y,
                                      size_t m,
                                      const char *q,
                                      enum QtauQScalarMode mode,
                                      char **out);

/**
 * Phase-chain correlation with a creation operator at `site`; `|y| = |x| − 1`.
 *
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
enum QtauStatus qtau_correlation(const struct QtauPointSet *x,
                                 const struct QtauPointSet *y,
                                 size_t m,
                                 size_t site,
                                 enum QtauCorrelationMode mode,
                                 char **out);

/**
 * Builds an occupation-basis chain on sites `0..=m` with up to `bound`
 * particles. `q` null selects the phase chain, otherwise the q-boson chain.
 *
 * # Safety
 * `q` must be null or a valid C string; `out` a valid pointer.
 */
enum QtauStatus qtau_chain_new(const char *q, size_t m, size_t bound, struct QtauChain **out);

/**
 * # Safety
 * `c` must be null or a handle from [`qtau_chain_new`] not yet freed.
 */
void qtau_chain_free(struct QtauChain *c);

/**
 * Vacuum pairing of annihilation strings at `x` with creation strings at
 * `y`; `site < 0` means no inserted creation operator.
 *
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
enum QtauStatus qtau_chain_pairing(const struct QtauChain *chain,
                                   const struct QtauPointSet *x,
                                   const struct QtauPointSet *y,
                                   int64_t site,
                                   char **out);

/**
 * Kostka-Foulkes tables of weight `d` as JSON.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum QtauStatus qtau_kostka_json(size_t d, char **out);

/**
 * Phase-chain Bethe roots for the given quantum numbers. Writes `2 n`
 * doubles (real, imaginary interleaved) to `roots` and the residual to `residual`.
 *
 * # Safety
 * `qn` must point to `n` integers, `roots` to room for `2 n` doubles.
 */
enum QtauStatus qtau_bethe_phase(size_t n,
                                 size_t m,
                                 const int64_t *qn,
                                 double *roots,
                                 double *residual);

/**
 * Runs a named identity suite with default bounds and writes its JSON report.
 * `all_pass` receives 1 if every check passed, else 0.
 *
 * # Safety
 * `suite` must be a valid C string; `out` and `all_pass` valid pointers.
 */
enum QtauStatus qtau_run_suite(const char *suite, uint64_t seed, char **out, int32_t *all_pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTAU_H */
