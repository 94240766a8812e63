/* C interface to the superlie exact Lie superalgebra toolkit. Generated by cbindgen; do not edit. */

#ifndef SUPERLIE_H
#define SUPERLIE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every function.
typedef enum SlStatus {
  // Success.
  SL_STATUS_OK = 0,
  // A required pointer argument was null.
  SL_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  SL_STATUS_INVALID_UTF8 = 2,
  // Input text could not be parsed.
  SL_STATUS_PARSE_ERROR = 3,
  // Unknown catalog id.
  SL_STATUS_UNKNOWN_ID = 4,
  // Dimensions of the arguments do not match.
  SL_STATUS_DIMENSION_MISMATCH = 5,
  // A matrix is singular.
  SL_STATUS_SINGULAR = 6,
  // The superdeterminant is undefined (both diagonal blocks singular).
  SL_STATUS_SDET_UNDEFINED = 7,
  // A parameter value is missing or out of range.
  SL_STATUS_PARAMETER_ERROR = 8,
  // Any other invalid input.
  SL_STATUS_INVALID_ARGUMENT = 9,
  // An internal panic was caught.
  SL_STATUS_PANIC = 10,
} SlStatus;

// An algebra (possibly depending on parameters).
typedef struct SlAlgebra SlAlgebra;

// A square supermatrix with Gaussian-rational entries.
typedef struct SlMatrix SlMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a definition text holding exactly one algebra.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be a valid pointer.
enum SlStatus sl_algebra_parse(const char *text, struct SlAlgebra **out);

// Loads an algebra from the built-in catalog, e.g. `"C4"` or `"I(1,2)"`.
//
// # Safety
// `id` must be a NUL-terminated string; `out` must be a valid pointer.
enum SlStatus sl_algebra_from_catalog(const char *id, struct SlAlgebra **out);

// Fixes every parameter, e.g. `"p=1/2"` or `"p=-1, k=2"`, returning a
// new handle.  Values are checked against the declared ranges.
//
// # Safety
// `alg` must be a live handle, `assignments` a NUL-terminated string and
// `out` a valid pointer.
enum SlStatus sl_algebra_specialize(const struct SlAlgebra *alg,
                                    const char *assignments,
                                    struct SlAlgebra **out);

// Releases an algebra handle (null is ignored).
//
// # Safety
// `alg` must be null or a handle not yet freed.
void sl_algebra_free(struct SlAlgebra *alg);

// Graded dimensions `(m|n)`.
//
// # Safety
// `alg` must be a live handle; `m` and `n` valid pointers.
enum SlStatus sl_algebra_dims(const struct SlAlgebra *alg, size_t *m, size_t *n);

// Number of nonzero components of the super Jacobi residual (checked
// symbolically in any remaining parameters).
//
// # Safety
// `alg` must be a live handle; `count` a valid pointer.
enum SlStatus sl_algebra_jacobi_nonzero(const struct SlAlgebra *alg, size_t *count);

// Canonical definition text of an algebra (free with [`sl_string_free`]).
//
// # Safety
// `alg` must be a live handle; `out` a valid pointer.
enum SlStatus sl_algebra_to_string(const struct SlAlgebra *alg, char **out);

// Describes every dual compatible with `alg` (free with
// [`sl_string_free`]).
//
// # Safety
// `alg` must be a live handle; `out` a valid pointer.
enum SlStatus sl_algebra_solve_duals(const struct SlAlgebra *alg, char **out);

// Residuals of the pair `(alg, dual)`, where `dual` holds the dual
// brackets over the same generators.  Writes five nonzero counts in the
// order: primal Jacobi, dual Jacobi, mixed Jacobi, double Jacobi, pairing
// ad-invariance.
//
// # Safety
// `alg` and `dual` must be live handles; `counts` must point to 5 writable
// `size_t` values.
enum SlStatus sl_pair_residual_nonzero(const struct SlAlgebra *alg,
                                       const struct SlAlgebra *dual,
                                       size_t *counts);

// Parses a matrix literal such as `"[1, 0; 0, 2i]"` with graded
// dimensions `(m|n)`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` a valid pointer.
enum SlStatus sl_matrix_parse(const char *text, size_t m, size_t n, struct SlMatrix **out);

// Superdeterminant as exact text, e.g. `"1/2"` (free with
// [`sl_string_free`]).
//
// # Safety
// `mat` must be a live handle; `out` a valid pointer.
enum SlStatus sl_matrix_sdet(const struct SlMatrix *mat, char **out);

// Releases a matrix handle (null is ignored).
//
// # Safety
// `mat` must be null or a handle not yet freed.
void sl_matrix_free(struct SlMatrix *mat);

// Releases a string returned by this library (null is ignored).
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void sl_string_free(char *s);

// Checks `T(src, C) = dst` and that `C` is a transformation matrix (and,
// with `dual_side`, that `C^{-st}` is one too).  Writes the verdict to
// `ok`; a failed check is not an error.
//
// # Safety
// Handles must be live; `ok` a valid pointer.
enum SlStatus sl_verify_isomorphism(const struct SlAlgebra *src,
                                    const struct SlAlgebra *dst,
                                    const struct SlMatrix *mat,
                                    bool dual_side,
                                    bool *ok);

// Certifies the built-in catalog; writes the number of passing entries
// and the total.
//
// # Safety
// `passed` and `total` must be valid pointers.
enum SlStatus sl_catalog_verify(size_t *passed, size_t *total);

// Message describing the last failure on this thread (empty after a
// success).  The pointer stays valid until the next call on this thread;
// do not free it.
const char *sl_last_error_message(void);

// Static, NUL-terminated name of a status code.
const char *sl_status_name(enum SlStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERLIE_H */
