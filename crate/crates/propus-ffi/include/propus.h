/* C bindings for the propus construction toolkit. */

#ifndef PROPUS_H
#define PROPUS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible call.
typedef enum PropusStatus {
  PROPUS_STATUS_OK = 0,
  // A required pointer argument was null.
  PROPUS_STATUS_NULL_ARGUMENT = 1,
  // An argument was out of range or unparsable.
  PROPUS_STATUS_INVALID_ARGUMENT = 2,
  // No route produced the requested object.
  PROPUS_STATUS_NOT_FOUND = 3,
  // The object failed its exact verification.
  PROPUS_STATUS_VERIFICATION_FAILED = 4,
  // Filesystem error.
  PROPUS_STATUS_IO = 5,
  // An internal panic was caught at the boundary.
  PROPUS_STATUS_PANIC = 6,
} PropusStatus;

// Opaque matrix handle; free with [`propus_matrix_free`].
typedef struct PropusMatrix PropusMatrix;

// Structural predicate flags for a matrix, all exact integer checks.
typedef struct PropusProperties {
  uint32_t order;
  uint8_t is_pm1;
  uint8_t is_hadamard;
  uint8_t is_symmetric;
  uint8_t is_skew_plus_identity;
  uint8_t is_conference;
} PropusProperties;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a symmetric propus-Hadamard matrix of the given order.
//
// `method` is one of `auto`, `paley-turyn`, `conference`, `doptimal`,
// `three-equal`, `miyamoto` (UTF-8, NUL-terminated); pass NULL for `auto`.
// On success `*out` owns the matrix.
//
// # Safety
// `out` must be a valid pointer; `method`, when non-null, must point to a
// NUL-terminated string that remains valid for the duration of the call.
enum PropusStatus propus_construct(uint32_t order, const char *method, struct PropusMatrix **out);

// Builds the Paley core of a prime-power order q: zero diagonal, ±1
// elsewhere, Q·Qᵀ = q·I - J.
//
// # Safety
// `out` must be a valid pointer.
enum PropusStatus propus_paley_core(uint32_t q, struct PropusMatrix **out);

// Matrix order, or 0 for a null handle.
//
// # Safety
// `m`, when non-null, must be a live handle from this library.
uint32_t propus_matrix_order(const struct PropusMatrix *m);

// Reads one entry (-1, 0 or +1) into `*out`.
//
// # Safety
// `m` must be a live handle; `out` must be valid.
enum PropusStatus propus_matrix_entry(const struct PropusMatrix *m,
                                      uint32_t row,
                                      uint32_t col,
                                      int32_t *out);

// Evaluates the structural predicates into `*out`.
//
// # Safety
// `m` must be a live handle; `out` must be valid.
enum PropusStatus propus_matrix_properties(const struct PropusMatrix *m,
                                           struct PropusProperties *out);

// Writes the matrix as a plain-text PGM image (P2, maxval 2; -1 -> 0,
// 0 -> 1, +1 -> 2).
//
// # Safety
// `m` must be a live handle; `path` must be a NUL-terminated UTF-8 string.
enum PropusStatus propus_matrix_write_pgm(const struct PropusMatrix *m, const char *path);

// Releases a handle. Null is a no-op.
//
// # Safety
// `m` must be null or a handle not yet freed.
void propus_matrix_free(struct PropusMatrix *m);

// Static human-readable name for a status code.
const char *propus_status_name(enum PropusStatus status);

// Library version as a static string.
const char *propus_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PROPUS_H */
