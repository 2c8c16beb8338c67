#ifndef DP1_H
#define DP1_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Dp1Status {
  DP1_STATUS_OK = 0,
  DP1_STATUS_NULL_POINTER = 1,
  DP1_STATUS_INVALID_UTF8 = 2,
  DP1_STATUS_PARSE = 3,
  DP1_STATUS_DIMENSION = 4,
  DP1_STATUS_NOT_ROOT = 5,
  DP1_STATUS_UNSUPPORTED = 6,
  DP1_STATUS_INPUT = 7,
  DP1_STATUS_BUFFER_TOO_SMALL = 8,
  DP1_STATUS_PANIC = 9,
} Dp1Status;

/**
 * Opaque handle to a geometric lattice.
 */
typedef struct Dp1Lattice Dp1Lattice;

/**
 * Static description of a status code.
 */
const char *dp1_status_message(enum Dp1Status status);

/**
 * Builds the lattice of a sextic type such as `"4|0"` or `"|||"`.
 *
 * # Safety
 * `sextic` must be a NUL-terminated string and `out` a valid pointer.
 */
enum Dp1Status dp1_lattice_new(const char *sextic, struct Dp1Lattice **out);

/**
 * # Safety
 * `lattice` must come from [`dp1_lattice_new`] and not be freed twice.
 */
void dp1_lattice_free(struct Dp1Lattice *lattice);

/**
 * Rank of the lattice, 0 for a null handle.
 *
 * # Safety
 * `lattice` must be null or a live handle.
 */
size_t dp1_lattice_rank(const struct Dp1Lattice *lattice);

/**
 * Copies the Gram matrix row by row into `out`, which holds `len` entries.
 *
 * # Safety
 * `out` must point to `len` writable `int64_t`.
 */
enum Dp1Status dp1_lattice_gram(const struct Dp1Lattice *lattice, int64_t *out, size_t len);

/**
 * Number of roots `e² = −2`.
 *
 * # Safety
 * `lattice` must be a live handle; `out` a valid pointer.
 */
enum Dp1Status dp1_lattice_root_count(const struct Dp1Lattice *lattice, size_t *out);

/**
 * Positive tritangent counts in the order `T0, T0*, T1, T2, T3`.
 *
 * # Safety
 * `sextic` must be a NUL-terminated string and `out` point to 5 `size_t`.
 */
enum Dp1Status dp1_tritangent_counts(const char *sextic, size_t *out);

/**
 * The tritangent listing of a sextic type as a JSON report.
 *
 * # Safety
 * `sextic` must be a NUL-terminated string and `out` a valid pointer; the
 * result must be released with [`dp1_string_free`].
 */
enum Dp1Status dp1_classify_json(const char *sextic, char **out);

/**
 * `Φ(v)` in normal form as JSON, for a surface such as `"K#2T2"`.
 *
 * # Safety
 * `v` must point to `len` readable `int64_t` (or be null with `len = 0`);
 * `out` as for [`dp1_classify_json`].
 */
enum Dp1Status dp1_phi_json(const char *surface, const int64_t *v, size_t len, char **out);

/**
 * Runs every acceptance check; `passed` receives 1 if all pass, else 0.
 *
 * # Safety
 * `passed` must be a valid pointer.
 */
enum Dp1Status dp1_verify(uint64_t seed, int32_t *passed);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void dp1_string_free(char *s);

#endif  /* DP1_H */
