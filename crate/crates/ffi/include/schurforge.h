#ifndef SCHURFORGE_H
#define SCHURFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Bit flags for violated conditions in [`SfTheoremCheck::failures`].
 */
#define SF_COND_C0_NONZERO 1

#define SF_COND_GAP_LE_1 (1 << 1)

#define SF_COND_ADJACENT_GCD (1 << 2)

#define SF_COND_P_DIVIDES_GAP (1 << 3)

#define SF_COND_GCD_C_NOT_1 (1 << 4)

/**
 * Result code of every fallible call.
 */
typedef enum SfStatus {
  SF_STATUS_OK = 0,
  SF_STATUS_NULL_POINTER = 1,
  SF_STATUS_INVALID_UTF8 = 2,
  SF_STATUS_PARSE = 3,
  SF_STATUS_CONSTRUCTION = 4,
  SF_STATUS_CONTEXT = 5,
  SF_STATUS_DIVISION_BY_ZERO = 6,
  SF_STATUS_NOT_FINITE = 7,
  SF_STATUS_SIZE = 8,
  SF_STATUS_BAD_PARAMETER = 9,
  SF_STATUS_BAD_SEQUENCE = 10,
  SF_STATUS_OTHER = 11,
  SF_STATUS_PANIC = 12,
} SfStatus;

/**
 * Oracle outcome kinds.
 */
typedef enum SfVerdictKind {
  SF_VERDICT_KIND_IRREDUCIBLE = 0,
  SF_VERDICT_KIND_REDUCIBLE = 1,
  SF_VERDICT_KIND_INCONCLUSIVE = 2,
} SfVerdictKind;

/**
 * Opaque field context.
 */
typedef struct SfField SfField;

/**
 * Opaque polynomial.
 */
typedef struct SfPoly SfPoly;

typedef struct SfTheoremCheck {
  bool applies;
  bool only_if_holds;
  uint32_t failures;
} SfTheoremCheck;

typedef struct SfVerdict {
  enum SfVerdictKind kind;
  uint32_t searched_degree;
  uint64_t candidates_tested;
} SfVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static nul-terminated string.
 */
const char *sf_version(void);

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *sf_last_error_message(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sf_string_free(char *s);

/**
 * Parse a field spec `p`, `p:m` or `Q`.
 *
 * # Safety
 * `spec` must be a nul-terminated string; `out` must be writable.
 */
enum SfStatus sf_field_parse(const char *spec, struct SfField **out);

/**
 * Release a field. Null is ignored.
 *
 * # Safety
 * `f` must come from [`sf_field_parse`] and not have been freed.
 */
void sf_field_free(struct SfField *f);

/**
 * Characteristic of the field (0 for the rationals).
 *
 * # Safety
 * `f` must be a live field handle or null.
 */
enum SfStatus sf_field_characteristic(const struct SfField *f, uint32_t *out);

/**
 * Canonical name such as `GF(7)`, `GF(2^3)` or `Q`.
 *
 * # Safety
 * `f` must be a live field handle; `out` must be writable.
 */
enum SfStatus sf_field_to_string(const struct SfField *f, char **out);

/**
 * `S_c` over the field for the strictly increasing sequence `c[0..len]`.
 *
 * # Safety
 * `c` must point to `len` readable values; `out` must be writable.
 */
enum SfStatus sf_schur_poly(const struct SfField *f,
                            const uint32_t *c,
                            size_t len,
                            struct SfPoly **out);

/**
 * Parse canonical polynomial text in `nvars` variables `x0, x1, ...`.
 *
 * # Safety
 * `text` must be nul-terminated; `out` must be writable.
 */
enum SfStatus sf_poly_parse(const struct SfField *f,
                            size_t nvars,
                            const char *text,
                            struct SfPoly **out);

/**
 * Release a polynomial. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void sf_poly_free(struct SfPoly *p);

/**
 * Canonical text of a polynomial.
 *
 * # Safety
 * `p` must be a live polynomial handle; `out` must be writable.
 */
enum SfStatus sf_poly_to_string(const struct SfPoly *p, char **out);

/**
 * Total degree; the zero polynomial is an error.
 *
 * # Safety
 * `p` must be a live polynomial handle; `out` must be writable.
 */
enum SfStatus sf_poly_total_degree(const struct SfPoly *p, uint64_t *out);

/**
 * Whether two polynomials are equal (same ring and same terms).
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum SfStatus sf_poly_equal(const struct SfPoly *a, const struct SfPoly *b, bool *out);

/**
 * Product `a * b`.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum SfStatus sf_poly_mul(const struct SfPoly *a, const struct SfPoly *b, struct SfPoly **out);

/**
 * Exact quotient `a / b`. When `b` does not divide `a` the call succeeds,
 * `*divides` is false and `*out` is null.
 *
 * # Safety
 * Both handles must be live; `out` and `divides` must be writable.
 */
enum SfStatus sf_poly_exact_divide(const struct SfPoly *a,
                                   const struct SfPoly *b,
                                   struct SfPoly **out,
                                   bool *divides);

/**
 * Evaluate the irreducibility hypotheses for `c[0..len]` in characteristic
 * `p` (0 for characteristic zero).
 *
 * # Safety
 * `c` must point to `len` readable values; `out` must be writable.
 */
enum SfStatus sf_theorem_conditions(const uint32_t *c,
                                    size_t len,
                                    uint32_t p,
                                    struct SfTheoremCheck *out);

/**
 * Exhaustive irreducibility oracle over a finite field. A negative
 * `degree_cap` searches every degree. When the verdict is Reducible and
 * `factor` is not null, `*factor` receives the first divisor in
 * enumeration order; otherwise it is set to null.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable; `factor` may be null.
 */
enum SfStatus sf_irreducibility(const struct SfPoly *p,
                                int64_t degree_cap,
                                struct SfVerdict *out,
                                struct SfPoly **factor);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHURFORGE_H */
