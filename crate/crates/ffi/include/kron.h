#ifndef KRON_H
#define KRON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum KronStatus {
  KRON_STATUS_OK = 0,
  /**
   * A well-posed question with a negative answer: no certificate found,
   * or a certificate that does not verify.
   */
  KRON_STATUS_NEGATIVE = 1,
  /**
   * Malformed input: bad syntax, mismatched sizes, null pointers.
   */
  KRON_STATUS_INVALID_ARGUMENT = 2,
  /**
   * An internal consistency check failed.
   */
  KRON_STATUS_INTERNAL = 3,
  /**
   * Input outside a function's validity domain or budget.
   */
  KRON_STATUS_OUT_OF_DOMAIN = 4,
  /**
   * A value does not fit the requested integer type.
   */
  KRON_STATUS_OVERFLOW = 5,
  /**
   * The library panicked; this is a bug.
   */
  KRON_STATUS_PANIC = 6,
} KronStatus;

/**
 * Opaque certificate handle.
 */
typedef struct KronCertificate KronCertificate;

/**
 * Opaque partition handle.
 */
typedef struct KronPartition KronPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The last error message on this thread, or null if none. The pointer
 * stays valid until the next failing call on this thread.
 */
const char *kron_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void kron_string_free(char *s);

/**
 * Parses `"5,3,1"`, `"(5,3,1)"` or `"4^4"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum KronStatus kron_partition_parse(const char *text, struct KronPartition **out);

/**
 * Builds a partition from `len` weakly decreasing positive parts.
 *
 * # Safety
 * `parts` must point to `len` readable values (or be null when `len` is
 * 0); `out` must be writable.
 */
enum KronStatus kron_partition_new(const uint32_t *parts, size_t len, struct KronPartition **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed. Null is ignored.
 */
void kron_partition_free(struct KronPartition *p);

/**
 * The number of boxes, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t kron_partition_size(const struct KronPartition *p);

/**
 * The number of parts, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t kron_partition_len(const struct KronPartition *p);

/**
 * Copies up to `cap` parts into `buf`; `*len` receives the full count.
 *
 * # Safety
 * `p` must be a live handle, `buf` writable for `cap` values, `len` writable.
 */
enum KronStatus kron_partition_parts(const struct KronPartition *p,
                                     uint32_t *buf,
                                     size_t cap,
                                     size_t *len);

/**
 * The comma-separated form, e.g. `"4,4,4,4"`. Free with
 * [`kron_string_free`]. Null for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *kron_partition_to_string(const struct KronPartition *p);

/**
 * The conjugate (transpose) as a new handle.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum KronStatus kron_partition_conjugate(const struct KronPartition *p, struct KronPartition **out);

/**
 * `g(lambda, mu, nu)` as a decimal string.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum KronStatus kron_coefficient(const struct KronPartition *lambda,
                                 const struct KronPartition *mu,
                                 const struct KronPartition *nu,
                                 char **out);

/**
 * `g(lambda, mu, nu)` as a 64-bit integer; `Overflow` if it does not fit.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum KronStatus kron_coefficient_u64(const struct KronPartition *lambda,
                                     const struct KronPartition *mu,
                                     const struct KronPartition *nu,
                                     uint64_t *out);

/**
 * `chi^lambda(alpha)` as a decimal string (possibly negative).
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum KronStatus kron_character(const struct KronPartition *lambda,
                               const struct KronPartition *alpha,
                               char **out);

/**
 * The zero classes of the tensor square of the `m x m` square, one line
 * per class. Side lengths above the desk-scale budget need
 * `budget_override`.
 *
 * # Safety
 * `out` must be writable.
 */
enum KronStatus kron_missing(uint32_t m, bool budget_override, char **out);

/**
 * Searches for a certificate of `g(lambda, mu, nu) > 0` with the built-in
 * strategies. `Negative` when none is found within `budget` expansions.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum KronStatus kron_certify(const struct KronPartition *lambda,
                             const struct KronPartition *mu,
                             const struct KronPartition *nu,
                             size_t budget,
                             struct KronCertificate **out);

/**
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum KronStatus kron_certificate_from_json(const char *json, struct KronCertificate **out);

/**
 * Compact JSON. Free with [`kron_string_free`]. Null for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
char *kron_certificate_to_json(const struct KronCertificate *c);

/**
 * Re-checks every leaf and node. `Negative` if the certificate is wrong;
 * the last error then names the failure kind (e.g. `combine-mismatch`).
 *
 * # Safety
 * `c` must be a live handle.
 */
enum KronStatus kron_certificate_verify(const struct KronCertificate *c, size_t oracle_cap);

/**
 * Number of leaves, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t kron_certificate_leaf_count(const struct KronCertificate *c);

/**
 * # Safety
 * `c` must come from this library and not have been freed. Null is ignored.
 */
void kron_certificate_free(struct KronCertificate *c);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KRON_H */
