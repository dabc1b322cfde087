/* C interface to the fishburn library. Generated by cbindgen; do not edit. */

#ifndef FISHBURN_H
#define FISHBURN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum FbnStatus {
  // The call succeeded.
  FBN_STATUS_OK = 0,
  // A required pointer argument was null.
  FBN_STATUS_NULL_ARGUMENT = 1,
  // A text argument was not valid UTF-8.
  FBN_STATUS_INVALID_UTF8 = 2,
  // The input failed to parse or validate as the requested object.
  FBN_STATUS_PARSE = 3,
  // The object is outside the domain of the operation, e.g. a
  // permutation containing the pattern or a weight-1 matrix handed
  // to removal.
  FBN_STATUS_DOMAIN = 4,
  // A label, position, size, or buffer capacity was out of range.
  FBN_STATUS_RANGE = 5,
} FbnStatus;

// Opaque handle around a validated Fishburn matrix.
typedef struct FbnMatrix FbnMatrix;

// Opaque handle around a validated permutation.
typedef struct FbnPermutation FbnPermutation;

// Opaque handle around a validated ascent sequence.
typedef struct FbnSequence FbnSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null if no
// call has failed yet. The pointer stays valid until the next failing
// call on the same thread; do not free it.
const char *fbn_last_error_message(void);

// Releases a string returned by any `_format`, `_json`, or `_number`
// function.
//
// # Safety
// `s` must be a pointer previously returned through an out parameter
// of this library, not yet freed, or null.
void fbn_string_free(char *s);

// Parses a permutation from space-separated one-line notation, e.g.
// "8 5 2 3 1 6 4 7".
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum FbnStatus fbn_perm_parse(const char *text, struct FbnPermutation **out);

// Builds a permutation from an array of values 1..=len.
//
// # Safety
// `values` must point to `len` readable u32 values; `out` must be
// valid.
enum FbnStatus fbn_perm_from_values(const uint32_t *values,
                                    size_t len,
                                    struct FbnPermutation **out);

// Number of entries, or 0 for null.
//
// # Safety
// `p` must be a live handle or null.
size_t fbn_perm_len(const struct FbnPermutation *p);

// Copies the one-line notation into `buf`. Fails with Range when
// `cap` is smaller than the length.
//
// # Safety
// `p` must be a live handle; `buf` must hold `cap` writable u32s.
enum FbnStatus fbn_perm_copy_values(const struct FbnPermutation *p, uint32_t *buf, size_t cap);

// Renders the permutation as space-separated text.
//
// # Safety
// `p` must be a live handle; `out` must be valid. Free the result
// with `fbn_string_free`.
enum FbnStatus fbn_perm_format(const struct FbnPermutation *p, char **out);

// True iff the permutation contains the forbidden pattern.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
enum FbnStatus fbn_perm_contains_pattern(const struct FbnPermutation *p, bool *out);

// Every permutation statistic as a JSON object. Fails with Domain on
// pattern-containing input.
//
// # Safety
// `p` must be a live handle; `out` must be valid. Free the result
// with `fbn_string_free`.
enum FbnStatus fbn_perm_stats_json(const struct FbnPermutation *p, char **out);

// # Safety
// `p` must be a handle from this library, not yet freed, or null.
void fbn_perm_free(struct FbnPermutation *p);

// Parses an ascent sequence from space-separated text, e.g.
// "0 1 1 0 2 1 0 3".
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum FbnStatus fbn_seq_parse(const char *text, struct FbnSequence **out);

// Builds an ascent sequence from an array, validating the ascent
// bound.
//
// # Safety
// `values` must point to `len` readable u32 values; `out` must be
// valid.
enum FbnStatus fbn_seq_from_values(const uint32_t *values, size_t len, struct FbnSequence **out);

// Number of entries, or 0 for null.
//
// # Safety
// `x` must be a live handle or null.
size_t fbn_seq_len(const struct FbnSequence *x);

// Copies the entries into `buf`. Fails with Range when `cap` is too
// small.
//
// # Safety
// `x` must be a live handle; `buf` must hold `cap` writable u32s.
enum FbnStatus fbn_seq_copy_values(const struct FbnSequence *x, uint32_t *buf, size_t cap);

// Renders the sequence as space-separated text.
//
// # Safety
// `x` must be a live handle; `out` must be valid. Free the result
// with `fbn_string_free`.
enum FbnStatus fbn_seq_format(const struct FbnSequence *x, char **out);

// Sequence statistics, the modified sequence, and its polynomial, as
// a JSON object.
//
// # Safety
// `x` must be a live handle; `out` must be valid. Free the result
// with `fbn_string_free`.
enum FbnStatus fbn_seq_stats_json(const struct FbnSequence *x, char **out);

// # Safety
// `x` must be a handle from this library, not yet freed, or null.
void fbn_seq_free(struct FbnSequence *x);

// Parses a matrix from semicolon-separated rows, e.g. "1 1; 0 1".
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum FbnStatus fbn_matrix_parse(const char *text, struct FbnMatrix **out);

// Builds a matrix from `dim * dim` row-major cells, validating the
// Fishburn invariants.
//
// # Safety
// `cells` must point to `dim * dim` readable u64 values; `out` must
// be valid.
enum FbnStatus fbn_matrix_from_cells(const uint64_t *cells, size_t dim, struct FbnMatrix **out);

// Number of rows, or 0 for null.
//
// # Safety
// `m` must be a live handle or null.
size_t fbn_matrix_dim(const struct FbnMatrix *m);

// Sum of all entries, or 0 for null.
//
// # Safety
// `m` must be a live handle or null.
uint64_t fbn_matrix_weight(const struct FbnMatrix *m);

// Copies the cells row-major into `buf`. Fails with Range when `cap`
// is smaller than dim * dim.
//
// # Safety
// `m` must be a live handle; `buf` must hold `cap` writable u64s.
enum FbnStatus fbn_matrix_copy_cells(const struct FbnMatrix *m, uint64_t *buf, size_t cap);

// Renders the matrix as semicolon-separated rows.
//
// # Safety
// `m` must be a live handle; `out` must be valid. Free the result
// with `fbn_string_free`.
enum FbnStatus fbn_matrix_format(const struct FbnMatrix *m, char **out);

// Every matrix statistic as a JSON object.
//
// # Safety
// `m` must be a live handle; `out` must be valid. Free the result
// with `fbn_string_free`.
enum FbnStatus fbn_matrix_stats_json(const struct FbnMatrix *m, char **out);

// # Safety
// `m` must be a handle from this library, not yet freed, or null.
void fbn_matrix_free(struct FbnMatrix *m);

// Encodes an avoider as its ascent sequence. Fails with Domain when
// the permutation contains the pattern.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
enum FbnStatus fbn_map_perm_to_seq(const struct FbnPermutation *p, struct FbnSequence **out);

// Decodes an ascent sequence to its avoider.
//
// # Safety
// `x` must be a live handle; `out` must be valid.
enum FbnStatus fbn_map_seq_to_perm(const struct FbnSequence *x, struct FbnPermutation **out);

// Builds the weight-n matrix of an ascent sequence.
//
// # Safety
// `x` must be a live handle; `out` must be valid.
enum FbnStatus fbn_map_seq_to_matrix(const struct FbnSequence *x, struct FbnMatrix **out);

// Recovers the ascent sequence of a matrix by repeated removal.
//
// # Safety
// `m` must be a live handle; `out` must be valid.
enum FbnStatus fbn_map_matrix_to_seq(const struct FbnMatrix *m, struct FbnSequence **out);

// Transposes along the North-East diagonal.
//
// # Safety
// `m` must be a live handle; `out` must be valid.
enum FbnStatus fbn_matrix_flip(const struct FbnMatrix *m, struct FbnMatrix **out);

// The composite map from avoiders to matrices (encode, build, flip).
// Fails with Domain when the permutation contains the pattern.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
enum FbnStatus fbn_map_perm_to_matrix(const struct FbnPermutation *p, struct FbnMatrix **out);

// Inverse of the composite map.
//
// # Safety
// `m` must be a live handle; `out` must be valid.
enum FbnStatus fbn_map_matrix_to_perm(const struct FbnMatrix *m, struct FbnPermutation **out);

// The n-th Fishburn number as a decimal string (exact at any n).
//
// # Safety
// `out` must be valid. Free the result with `fbn_string_free`.
enum FbnStatus fbn_fishburn_number(uint32_t n, char **out);

// Runs the verification harness up to `n_max` and returns the full
// report as JSON; `out_pass` receives the overall verdict. Fails with
// Range when `n_max` exceeds the harness cap.
//
// # Safety
// `out` and `out_pass` must be valid. Free the string with
// `fbn_string_free`.
enum FbnStatus fbn_verify_json(uint32_t n_max, char **out, bool *out_pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FISHBURN_H */
