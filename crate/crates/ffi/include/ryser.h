#ifndef RYSER_H
#define RYSER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RyserStatus {
  RYSER_STATUS_OK = 0,
  RYSER_STATUS_NULL_POINTER = 1,
  RYSER_STATUS_INVALID_ARGUMENT = 2,
  RYSER_STATUS_PRECONDITION = 3,
  RYSER_STATUS_INVALID_HYPERGRAPH = 4,
  RYSER_STATUS_EDGE_INDEX = 5,
  RYSER_STATUS_BUDGET_EXHAUSTED = 6,
  RYSER_STATUS_CERTIFICATE_REJECTED = 7,
  RYSER_STATUS_INTERNAL = 8,
  RYSER_STATUS_PANIC = 9,
} RyserStatus;

typedef enum RyserConjecture {
  RYSER_CONJECTURE_PROVED_TIGHT = 0,
  RYSER_CONJECTURE_PROVED = 1,
  RYSER_CONJECTURE_OPEN_EXCEPTIONAL = 2,
  RYSER_CONJECTURE_OPEN = 3,
} RyserConjecture;

/**
 * Opaque handle to a validated cover.
 */
typedef struct RyserCertificate RyserCertificate;

/**
 * Opaque handle to an `(r,t)`-graph.
 */
typedef struct RyserHypergraph RyserHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *ryser_last_error(void);

/**
 * Static name of a status code.
 */
const char *ryser_status_name(enum RyserStatus status);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` is NULL or was returned by this library and not yet freed.
 */
void ryser_string_free(char *s);

/**
 * Builds a hypergraph from `r` part sizes and `edge_count * r` row-major
 * local indices.
 *
 * # Safety
 * `part_sizes` points to `r` values; `edges` points to `edge_count * r`
 * values (may be NULL when `edge_count` is 0).
 */
enum RyserStatus ryser_hypergraph_new(const size_t *part_sizes,
                                      size_t r,
                                      const size_t *edges,
                                      size_t edge_count,
                                      struct RyserHypergraph **out);

/**
 * Parses an `rtgraph-v1` document.
 *
 * # Safety
 * `json` is a NUL-terminated string.
 */
enum RyserStatus ryser_hypergraph_from_json(const char *json, struct RyserHypergraph **out);

/**
 * Canonical `rtgraph-v1` text; free with [`ryser_string_free`].
 *
 * # Safety
 * `h` is a live handle; `out` is writable.
 */
enum RyserStatus ryser_hypergraph_to_json(const struct RyserHypergraph *h, char **out);

/**
 * # Safety
 * `h` is NULL or a live handle, not used afterwards.
 */
void ryser_hypergraph_free(struct RyserHypergraph *h);

/**
 * # Safety
 * `h` is a live handle; each output pointer is NULL or writable.
 */
enum RyserStatus ryser_hypergraph_shape(const struct RyserHypergraph *h,
                                        size_t *out_r,
                                        size_t *out_edges,
                                        size_t *out_vertices);

/**
 * Copies the `r` local indices of edge `e` into `out`.
 *
 * # Safety
 * `h` is a live handle; `out` has room for `len` values.
 */
enum RyserStatus ryser_hypergraph_edge(const struct RyserHypergraph *h,
                                       size_t e,
                                       size_t *out,
                                       size_t len);

/**
 * Smallest pairwise intersection and the first pair attaining it.
 *
 * # Safety
 * `h` is a live handle; `out_t` is writable; the pair outputs may be NULL.
 */
enum RyserStatus ryser_min_intersection(const struct RyserHypergraph *h,
                                        size_t *out_t,
                                        size_t *out_e1,
                                        size_t *out_e2);

/**
 * # Safety
 * `out` is writable.
 */
enum RyserStatus ryser_generate_level(size_t r, size_t ell, struct RyserHypergraph **out);

/**
 * # Safety
 * `out` is writable.
 */
enum RyserStatus ryser_generate_truncated_plane(size_t q, struct RyserHypergraph **out);

/**
 * # Safety
 * `out` is writable.
 */
enum RyserStatus ryser_generate_affine_dual(size_t q, size_t n, struct RyserHypergraph **out);

/**
 * # Safety
 * `h` is a live handle; `out` is writable.
 */
enum RyserStatus ryser_generate_blowup(const struct RyserHypergraph *h,
                                       size_t t,
                                       struct RyserHypergraph **out);

/**
 * Seeded random `(r,t)`-graph with parts of size `r`.
 *
 * # Safety
 * `out` is writable.
 */
enum RyserStatus ryser_generate_random(size_t r,
                                       size_t t,
                                       size_t target_edges,
                                       uint64_t seed,
                                       struct RyserHypergraph **out);

/**
 * Exact s-cover number. `budget` 0 means unlimited; when the budget runs
 * out `out_exact` is false and `out_value` holds the best size found.
 * `out_witness` may be NULL.
 *
 * # Safety
 * `h` is a live handle; `out_value` and `out_exact` are writable.
 */
enum RyserStatus ryser_tau_s(const struct RyserHypergraph *h,
                             size_t s,
                             uint64_t budget,
                             size_t *out_value,
                             bool *out_exact,
                             struct RyserCertificate **out_witness);

/**
 * Smallest cover among the constructive routes that apply.
 *
 * # Safety
 * `h` is a live handle; `out` is writable.
 */
enum RyserStatus ryser_general_cover(const struct RyserHypergraph *h,
                                     size_t t,
                                     struct RyserCertificate **out);

/**
 * # Safety
 * `h` is a live handle; `out` is writable.
 */
enum RyserStatus ryser_kwise_cover(const struct RyserHypergraph *h,
                                   size_t k,
                                   size_t t,
                                   struct RyserCertificate **out);

/**
 * # Safety
 * `c` is a live handle; `out` is writable.
 */
enum RyserStatus ryser_certificate_size(const struct RyserCertificate *c, size_t *out);

/**
 * Copies the cover's vertices as (part, index) pairs into two arrays.
 *
 * # Safety
 * `c` is a live handle; `parts` and `indices` have room for `len` values.
 */
enum RyserStatus ryser_certificate_vertices(const struct RyserCertificate *c,
                                            size_t *parts,
                                            size_t *indices,
                                            size_t len);

/**
 * Construction tag such as `two-edge/case-1`; free with [`ryser_string_free`].
 *
 * # Safety
 * `c` is a live handle; `out` is writable.
 */
enum RyserStatus ryser_certificate_provenance(const struct RyserCertificate *c, char **out);

/**
 * Re-checks the certificate against `h` by a full scan.
 *
 * # Safety
 * `c` and `h` are live handles; `out` is writable.
 */
enum RyserStatus ryser_certificate_validate(const struct RyserCertificate *c,
                                            const struct RyserHypergraph *h,
                                            bool *out);

/**
 * # Safety
 * `c` is NULL or a live handle, not used afterwards.
 */
void ryser_certificate_free(struct RyserCertificate *c);

/**
 * Lower and best upper bound on the largest cover number of `(r,t)`-graphs.
 *
 * # Safety
 * Both outputs are writable.
 */
enum RyserStatus ryser_bounds(int64_t r, int64_t t, int64_t *out_lower, int64_t *out_upper);

/**
 * Status of `τ <= r - t` at `(r, t)`; `out_not_tight` may be NULL.
 *
 * # Safety
 * `out` is writable.
 */
enum RyserStatus ryser_conjecture_status(int64_t r,
                                         int64_t t,
                                         enum RyserConjecture *out,
                                         bool *out_not_tight);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RYSER_H */
