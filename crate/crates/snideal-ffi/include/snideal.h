#ifndef SNIDEAL_H
#define SNIDEAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Element arithmetic selector for [`sn_ring_binop`].
 */
typedef enum SnBinop {
  SN_ADD = 0,
  SN_SUB = 1,
  SN_MUL = 2,
} SnBinop;

/**
 * Element class selector for [`sn_ring_elem_is`].
 */
typedef enum SnElemClass {
  SN_UNIT = 0,
  SN_NILPOTENT = 1,
  SN_ZERO_DIVISOR = 2,
  SN_REGULAR = 3,
} SnElemClass;

/**
 * Outcome of an ABI call.
 */
typedef enum SnStatus {
  SN_OK = 0,
  SN_NULL_ARGUMENT = 1,
  SN_INVALID_UTF8 = 2,
  SN_INVALID_SPEC = 3,
  SN_BAD_INDEX = 4,
  SN_NOT_DISJOINT = 5,
  SN_CAP_EXCEEDED = 6,
  SN_UNKNOWN_CHECK = 7,
  SN_PANIC = 8,
  SN_ERROR = 9,
} SnStatus;

/**
 * Opaque handle to a built ring.
 */
typedef struct SnRing SnRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call from the same thread.
 */
const char *sn_last_error(void);

/**
 * Releases a string returned by any `*_json` call.
 */
void sn_string_free(char *s);

/**
 * Builds a ring from a JSON spec, e.g. `{"zn": 12}` or
 * `{"product": [{"zn": 12}, {"zn": 4}]}`.
 *
 * # Safety
 * `spec_json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SnStatus sn_ring_from_json(const char *spec_json, struct SnRing **out);

/**
 * Builds the residue ring Z_n.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SnStatus sn_ring_zn(uint64_t n, struct SnRing **out);

/**
 * Releases a ring handle.
 *
 * # Safety
 * `ring` must come from a ring constructor and not be freed twice.
 */
void sn_ring_free(struct SnRing *ring);

/**
 * Ring order; 0 for a null handle.
 */
uint64_t sn_ring_order(const struct SnRing *ring);

uint64_t sn_ring_zero(const struct SnRing *ring);

uint64_t sn_ring_one(const struct SnRing *ring);

/**
 * Binary arithmetic on element indices.
 */
enum SnStatus sn_ring_binop(const struct SnRing *ring,
                            enum SnBinop op,
                            uint64_t a,
                            uint64_t b,
                            uint64_t *out);

/**
 * Additive inverse.
 */
enum SnStatus sn_ring_neg(const struct SnRing *ring, uint64_t a, uint64_t *out);

/**
 * a to the power k; k = 0 gives one.
 */
enum SnStatus sn_ring_pow(const struct SnRing *ring, uint64_t a, uint64_t k, uint64_t *out);

/**
 * Membership of an element in one of the classified subsets. Writes 1 or
 * 0 into `out`.
 */
enum SnStatus sn_ring_elem_is(const struct SnRing *ring,
                              enum SnElemClass class_,
                              uint64_t x,
                              uint8_t *out);

/**
 * Copies the nilradical into `buf` (up to `cap` indices) and writes the
 * full size through `len`. A short buffer is not an error; compare `len`
 * with `cap`.
 */
enum SnStatus sn_ring_nilradical(const struct SnRing *ring,
                                 uint64_t *buf,
                                 uintptr_t cap,
                                 uintptr_t *len);

/**
 * JSON summary of the ring: order, identity indices, unit and nilradical
 * element lists with counts.
 *
 * # Safety
 * `out` must be a valid pointer; free the string with [`sn_string_free`].
 */
enum SnStatus sn_ring_summary_json(const struct SnRing *ring, char **out);

/**
 * Classifies the ideal generated by `gens` against the multiplicative
 * closure of `seed` (pass `seed_len` 0 for absolute predicates only).
 * Writes the full report as JSON.
 *
 * # Safety
 * Arrays must match their lengths; `out` must be valid; free the string
 * with [`sn_string_free`].
 */
enum SnStatus sn_classify_json(const struct SnRing *ring,
                               const uint64_t *gens,
                               uintptr_t gens_len,
                               const uint64_t *seed,
                               uintptr_t seed_len,
                               char **out);

/**
 * Arithmetic classification of Z_n against a set of prime cofactors,
 * as JSON.
 *
 * # Safety
 * `primes` must hold `primes_len` entries; `out` must be valid; free the
 * string with [`sn_string_free`].
 */
enum SnStatus sn_zn_classify_json(uint64_t n,
                                  const uint64_t *primes,
                                  uintptr_t primes_len,
                                  char **out);

/**
 * Runs one registry check (or the whole registry when `check_id` is
 * null) over the corpus given as JSON (null for the default corpus).
 * Writes the report document and, optionally, the violation count.
 *
 * # Safety
 * `out` must be valid; free the string with [`sn_string_free`].
 */
enum SnStatus sn_verify_json(const char *corpus_json,
                             const char *check_id,
                             uint64_t *violations,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SNIDEAL_H */
