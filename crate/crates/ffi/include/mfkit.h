#ifndef MFKIT_H
#define MFKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum MfkitStatus {
  MFKIT_STATUS_OK = 0,
  MFKIT_STATUS_PARSE_ERROR,
  MFKIT_STATUS_INVALID_FIELD,
  MFKIT_STATUS_NOT_SCALAR_PLUS_NILPOTENT,
  MFKIT_STATUS_DEGREE_GUARD_EXCEEDED,
  MFKIT_STATUS_NOT_ZERO_DIMENSIONAL,
  MFKIT_STATUS_NOT_HOM_FINITE,
  MFKIT_STATUS_NOT_A_MATRIX_FACTORIZATION,
  MFKIT_STATUS_NOT_A_MORPHISM,
  MFKIT_STATUS_MIXED_HYPERSURFACE,
  MFKIT_STATUS_SHAPE_MISMATCH,
  MFKIT_STATUS_PRECONDITION_VIOLATED,
  MFKIT_STATUS_SOCLE_EMPTY,
  MFKIT_STATUS_NOT_A_SUMMAND,
  MFKIT_STATUS_UNRECOGNIZED_SUMMAND,
  MFKIT_STATUS_NO_SCALAR_BLOCK,
  MFKIT_STATUS_INVALID_TYPE_COMBINATION,
  MFKIT_STATUS_INDEX_OUT_OF_RANGE,
  MFKIT_STATUS_NON_CLOSURE,
  MFKIT_STATUS_UNKNOWN_FORMAT,
  MFKIT_STATUS_INVALID_INPUT,
  MFKIT_STATUS_NULL_POINTER,
  MFKIT_STATUS_INVALID_UTF8,
  MFKIT_STATUS_PANIC,
} MfkitStatus;

/**
 * Engine settings, a random seed and a cache of Hom spaces.
 */
typedef struct MfkitContext MfkitContext;

/**
 * A matrix factorization over ℚ or a prime field.
 */
typedef struct MfkitFactorization MfkitFactorization;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or "" after a
 * successful one. Valid until the next call on this thread.
 */
const char *mfkit_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void mfkit_string_free(char *s);

/**
 * A context with the given random seed and the Gröbner degree guard
 * taken from the environment.
 */
struct MfkitContext *mfkit_context_new(uint64_t seed);

/**
 * # Safety
 * `ctx` must come from [`mfkit_context_new`], or be null.
 */
void mfkit_context_free(struct MfkitContext *ctx);

/**
 * Catalog entry M_index of the type named by `spec`, e.g. "E6^1@3".
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` writable.
 */
enum MfkitStatus mfkit_catalog_entry(const char *spec,
                                     size_t index,
                                     struct MfkitFactorization **out);

/**
 * Reads one MFJSON object and verifies it.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum MfkitStatus mfkit_factorization_from_json(const char *json, struct MfkitFactorization **out);

/**
 * # Safety
 * `mf` must be a live handle and `out` writable.
 */
enum MfkitStatus mfkit_factorization_to_json(const struct MfkitFactorization *mf, char **out);

/**
 * # Safety
 * `mf` must come from this library, or be null.
 */
void mfkit_factorization_free(struct MfkitFactorization *mf);

/**
 * Matrix size, or 0 for a null handle.
 *
 * # Safety
 * `mf` must be a live handle or null.
 */
size_t mfkit_factorization_size(const struct MfkitFactorization *mf);

/**
 * Whether AB = BA = fI.
 *
 * # Safety
 * `mf` must be a live handle and `out` writable.
 */
enum MfkitStatus mfkit_factorization_verify(const struct MfkitFactorization *mf, bool *out);

/**
 * The shifted factorization (B, A).
 *
 * # Safety
 * `mf` must be a live handle and `out` writable.
 */
enum MfkitStatus mfkit_factorization_shift(const struct MfkitFactorization *mf,
                                           struct MfkitFactorization **out);

/**
 * Rank of coker A as a maximal Cohen-Macaulay module.
 *
 * # Safety
 * `mf` must be a live handle and `out` writable.
 */
enum MfkitStatus mfkit_mcm_rank(const struct MfkitFactorization *mf, size_t *out);

/**
 * dim Hom(m, n) in the homotopy category.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum MfkitStatus mfkit_hom_dim(const struct MfkitContext *ctx,
                               const struct MfkitFactorization *m,
                               const struct MfkitFactorization *n,
                               size_t *out);

/**
 * Whether m and n are isomorphic; `strict` selects the Nullstellensatz
 * certificate.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum MfkitStatus mfkit_iso_test(const struct MfkitContext *ctx,
                                const struct MfkitFactorization *m,
                                const struct MfkitFactorization *n,
                                bool strict,
                                bool *out);

/**
 * The AR quiver of a catalog type, serialized as "dot" or "json".
 *
 * # Safety
 * String arguments must be NUL-terminated, `ctx` live and `out` writable.
 */
enum MfkitStatus mfkit_ar_quiver(const struct MfkitContext *ctx,
                                 const char *spec,
                                 const char *format,
                                 char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MFKIT_H */
