#ifndef EMDB_H
#define EMDB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum EmdbStatus {
  EMDB_STATUS_OK = 0,
  EMDB_STATUS_NULL_POINTER = 1,
  EMDB_STATUS_INVALID_INPUT = 2,
  EMDB_STATUS_OUT_OF_RANGE = 3,
  EMDB_STATUS_NOT_DEBRUIJN = 4,
  EMDB_STATUS_NOT_DOUBLE_HELIX = 5,
  EMDB_STATUS_INTERNAL = 6,
} EmdbStatus;

/**
 * Opaque bit string. Create via parse/generate functions, release with
 * emdb_bitstring_free.
 */
typedef struct emdb_bitstring emdb_bitstring;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse bit-text ('0'/'1' characters) into a new handle.
 */
enum EmdbStatus emdb_bitstring_parse(const char *text, struct emdb_bitstring **out);

/**
 * Number of digits in the handle; 0 for null.
 */
size_t emdb_bitstring_len(const struct emdb_bitstring *s);

/**
 * Digit at `index` (0 or 1), or -1 when out of range or null.
 */
int32_t emdb_bitstring_get(const struct emdb_bitstring *s, size_t index);

/**
 * Render as a NUL-terminated '0'/'1' text. Release with emdb_text_free.
 */
enum EmdbStatus emdb_bitstring_to_text(const struct emdb_bitstring *s, char **out);

/**
 * Release a handle returned by this library. Null is a no-op.
 */
void emdb_bitstring_free(struct emdb_bitstring *s);

/**
 * Release text returned by emdb_bitstring_to_text. Null is a no-op.
 */
void emdb_text_free(char *text);

/**
 * `count` digits of the self-referential sequence after `seed` (null =
 * empty seed). `buffer` caps the suffix match length; 0 means unbounded.
 */
enum EmdbStatus emdb_em_generate(const struct emdb_bitstring *seed,
                                 size_t count,
                                 size_t buffer,
                                 struct emdb_bitstring **out);

/**
 * Greedy prefer-one De Bruijn string of the given order.
 */
enum EmdbStatus emdb_prefer_one(size_t order, struct emdb_bitstring **out);

/**
 * Order-(n+1) De Bruijn string grown from an arbitrary seed by the
 * splicing construction. `final_seed` (optional) receives the effective
 * seed after splices.
 */
enum EmdbStatus emdb_debruijn_from_seed(size_t order,
                                        const struct emdb_bitstring *seed,
                                        struct emdb_bitstring **out,
                                        struct emdb_bitstring **final_seed);

/**
 * Whether `s` is a De Bruijn string of the given order.
 */
enum EmdbStatus emdb_is_debruijn_string(const struct emdb_bitstring *s, size_t order, bool *out);

/**
 * Classify the residual decomposition of a De Bruijn string's circuit.
 */
enum EmdbStatus emdb_classify_helix(const struct emdb_bitstring *s,
                                    size_t order,
                                    bool *is_double_helix,
                                    size_t *component_count);

/**
 * Message string of a double helix.
 */
enum EmdbStatus emdb_message_of(const struct emdb_bitstring *s,
                                size_t order,
                                struct emdb_bitstring **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EMDB_H */
