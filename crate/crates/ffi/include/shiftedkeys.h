#ifndef SHIFTEDKEYS_H
#define SHIFTEDKEYS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum SkStatus {
  SK_STATUS_OK = 0,
  SK_STATUS_NULL_POINTER = 1,
  SK_STATUS_INVALID_UTF8 = 2,
  SK_STATUS_PARSE = 3,
  SK_STATUS_DOMAIN = 4,
  SK_STATUS_INEXACT_DIVISION = 5,
  SK_STATUS_GUARD = 6,
  SK_STATUS_INVARIANT = 7,
  SK_STATUS_NO_CHAIN = 8,
  /**
   * No positive expansion exists in the searched space.
   */
  SK_STATUS_NOT_FOUND = 9,
  SK_STATUS_PANIC = 10,
} SkStatus;

/**
 * Opaque expansion handle.
 */
typedef struct SkExpansion SkExpansion;

/**
 * Opaque polynomial handle.
 */
typedef struct SkPoly SkPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *sk_last_error(void);

/**
 * Library version as a static string.
 */
const char *sk_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sk_string_free(char *s);

/**
 * Parses a polynomial such as `3*b*x1^2*x3 - x2`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SkStatus sk_poly_parse(const char *text, struct SkPoly **out);

/**
 * Evaluates a command-line style expression, e.g. `qkey 2,0,3,1` or `pi[1] x1^2`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string; `out` must be writable.
 */
enum SkStatus sk_poly_eval(const char *expr, struct SkPoly **out);

/**
 * Evaluates basis `name` (e.g. `pkey`, `groth_sp`) at `index`.
 *
 * # Safety
 * Both strings must be NUL-terminated; `out` must be writable.
 */
enum SkStatus sk_basis_eval(const char *name, const char *index, struct SkPoly **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, freed once.
 */
void sk_poly_free(struct SkPoly *p);

/**
 * # Safety
 * `p` must be a live handle.
 */
enum SkStatus sk_poly_clone(const struct SkPoly *p, struct SkPoly **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum SkStatus sk_poly_add(const struct SkPoly *a, const struct SkPoly *b, struct SkPoly **out);

/**
 * # Safety
 * As [`sk_poly_add`].
 */
enum SkStatus sk_poly_sub(const struct SkPoly *a, const struct SkPoly *b, struct SkPoly **out);

/**
 * # Safety
 * As [`sk_poly_add`].
 */
enum SkStatus sk_poly_mul(const struct SkPoly *a, const struct SkPoly *b, struct SkPoly **out);

/**
 * 1 if equal, 0 if not, -1 on a null argument.
 *
 * # Safety
 * `a` and `b` must be null or live handles.
 */
int sk_poly_equal(const struct SkPoly *a, const struct SkPoly *b);

/**
 * Number of `(x-monomial, β-power)` terms; 0 for null.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t sk_poly_num_terms(const struct SkPoly *p);

/**
 * Text form, released with [`sk_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SkStatus sk_poly_to_string(const struct SkPoly *p, char **out);

/**
 * JSON form, released with [`sk_string_free`].
 *
 * # Safety
 * As [`sk_poly_to_string`].
 */
enum SkStatus sk_poly_to_json(const struct SkPoly *p, char **out);

/**
 * Expands `p` in `basis`: `key`, `lascoux`, `schubert`, `grothendieck` by peeling, or
 * `pkey`, `qkey`, `plascoux` by positive search (first solution; [`SkStatus::NotFound`]
 * when the search space holds none).
 *
 * # Safety
 * `p` must be a live handle, `basis` NUL-terminated, `out` writable.
 */
enum SkStatus sk_expand(const struct SkPoly *p, const char *basis, struct SkExpansion **out);

/**
 * # Safety
 * `e` must be null or a handle from this library, freed once.
 */
void sk_expansion_free(struct SkExpansion *e);

/**
 * Number of basis terms; 0 for null.
 *
 * # Safety
 * `e` must be null or a live handle.
 */
size_t sk_expansion_len(const struct SkExpansion *e);

/**
 * 1 when every coefficient lies in ℕ[β] and nothing is left over, 0 otherwise, -1 for null.
 *
 * # Safety
 * `e` must be null or a live handle.
 */
int sk_expansion_is_positive(const struct SkExpansion *e);

/**
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum SkStatus sk_expansion_to_string(const struct SkExpansion *e, char **out);

/**
 * # Safety
 * As [`sk_expansion_to_string`].
 */
enum SkStatus sk_expansion_to_json(const struct SkExpansion *e, char **out);

/**
 * Runs a conjecture sweep (`bound` 0 means the default). `verdict` receives 0
 * verified, 2 counterexample or 3 inconclusive; `report_json` may be null.
 *
 * # Safety
 * `id` must be NUL-terminated; `verdict` writable; `report_json` null or writable.
 */
enum SkStatus sk_verify(const char *id, size_t bound, int *verdict, char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHIFTEDKEYS_H */
