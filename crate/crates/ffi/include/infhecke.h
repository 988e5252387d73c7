#ifndef INFHECKE_H
#define INFHECKE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every function.
 */
typedef enum IhStatus {
  IH_STATUS_OK = 0,
  IH_STATUS_NULL_POINTER = 1,
  IH_STATUS_INVALID_UTF8 = 2,
  IH_STATUS_PARSE = 3,
  IH_STATUS_UNKNOWN_GENERATOR = 4,
  IH_STATUS_MISMATCH = 5,
  IH_STATUS_USAGE = 6,
  IH_STATUS_FAILURE = 7,
  IH_STATUS_PANIC = 8,
} IhStatus;

/**
 * An algebra presentation.
 */
typedef struct IhAlgebra IhAlgebra;

/**
 * An element in normal form, tied to its algebra.
 */
typedef struct IhElement IhElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call on the same thread.
 */
const char *ih_last_error(void);

/**
 * Builds `H_z` for `z` written as a polynomial in `Delta`.
 *
 * # Safety
 * `z` must be a NUL-terminated string and `out` a valid pointer.
 */
enum IhStatus ih_algebra_hz(const char *z, struct IhAlgebra **out);

/**
 * Builds a family algebra from its JSON spec, e.g.
 * `{"family":"gln","n":2,"beta0":"1","beta1":"0"}`.
 *
 * # Safety
 * `spec_json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum IhStatus ih_algebra_family(const char *spec_json, struct IhAlgebra **out);

/**
 * Number of generators of the algebra.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t ih_algebra_ngens(const struct IhAlgebra *alg);

/**
 * # Safety
 * `alg` must be null or a handle from this library not yet freed.
 */
void ih_algebra_free(struct IhAlgebra *alg);

/**
 * Parses and normalizes an expression such as `"[Delta, x] + 1/2*h"`.
 *
 * # Safety
 * `alg` must be a live handle, `expr` a NUL-terminated string and `out` a
 * valid pointer.
 */
enum IhStatus ih_element_parse(const struct IhAlgebra *alg,
                               const char *expr,
                               struct IhElement **out);

/**
 * # Safety
 * `e` must be null or a handle from this library not yet freed.
 */
void ih_element_free(struct IhElement *e);

/**
 * `out = a + b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum IhStatus ih_element_add(const struct IhElement *a,
                             const struct IhElement *b,
                             struct IhElement **out);

/**
 * `out = a * b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum IhStatus ih_element_mul(const struct IhElement *a,
                             const struct IhElement *b,
                             struct IhElement **out);

/**
 * `out = [a, b]`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum IhStatus ih_element_commutator(const struct IhElement *a,
                                    const struct IhElement *b,
                                    struct IhElement **out);

/**
 * Writes whether `a == b` (same algebra, same normal form).
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum IhStatus ih_element_equal(const struct IhElement *a, const struct IhElement *b, bool *out);

/**
 * Writes whether `e` commutes with every generator.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum IhStatus ih_element_is_central(const struct IhElement *e, bool *out);

/**
 * The normal form as re-parseable text.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer. Free the result
 * with [`ih_string_free`].
 */
enum IhStatus ih_element_to_string(const struct IhElement *e, char **out);

/**
 * The normal form as JSON.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer. Free the result
 * with [`ih_string_free`].
 */
enum IhStatus ih_element_to_json(const struct IhElement *e, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void ih_string_free(char *s);

/**
 * The central element `t_z` of `H_z`.
 *
 * # Safety
 * `z` must be a NUL-terminated string and `out` a valid pointer.
 */
enum IhStatus ih_tz(const char *z, struct IhElement **out);

/**
 * `f_n` and `g_n` as polynomials in `T`, computed by `method`
 * (0 first-order recursion, 1 three-term recursion, 2 closed form).
 *
 * # Safety
 * `out_f` and `out_g` must be valid pointers. Free both results with
 * [`ih_string_free`].
 */
enum IhStatus ih_fg_pair(size_t n, int32_t method, char **out_f, char **out_g);

/**
 * The central character `phi_z(lambda)` as `p/q` text.
 *
 * # Safety
 * `lambda` and `z` must be NUL-terminated strings and `out` a valid
 * pointer. Free the result with [`ih_string_free`].
 */
enum IhStatus ih_phi_z(const char *lambda, const char *z, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INFHECKE_H */
