#ifndef ZF_H
#define ZF_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The numeric values match the `zf` exit codes where they overlap.
 */
typedef enum ZfStatus {
  ZF_STATUS_OK = 0,
  ZF_STATUS_NULL_POINTER = 1,
  ZF_STATUS_INVALID_INPUT = 2,
  ZF_STATUS_CAP_EXCEEDED = 3,
  ZF_STATUS_BUFFER_TOO_SMALL = 4,
  ZF_STATUS_PANIC = 5,
} ZfStatus;

/**
 * Opaque graph handle.
 */
typedef struct ZfGraph ZfGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or may be null
 * when `edge_count` is 0) and `out` must be writable.
 */
enum ZfStatus zf_graph_new(size_t n, const size_t *edges, size_t edge_count, struct ZfGraph **out);

/**
 * Builds a named family: `P:n`, `C:n`, `K:n`, `petersen`, `bouquet:k`, `star:n`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` must be writable.
 */
enum ZfStatus zf_graph_family(const char *spec, struct ZfGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and must not be used afterwards.
 */
void zf_graph_free(struct ZfGraph *g);

/**
 * Number of vertices, 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t zf_graph_order(const struct ZfGraph *g);

/**
 * Number of edges, 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t zf_graph_size(const struct ZfGraph *g);

/**
 * Exact zero forcing number. When `witness` is non-null, a minimum forcing
 * set is written there in ascending order; `witness_capacity` must be at
 * least the zero forcing number, otherwise `BufferTooSmall` is returned
 * with `*z` still set.
 *
 * # Safety
 * `g` must be a live handle, `z` writable, and `witness` null or writable
 * for `witness_capacity` values.
 */
enum ZfStatus zf_zero_forcing_number(const struct ZfGraph *g,
                                     size_t *z,
                                     size_t *witness,
                                     size_t witness_capacity);

/**
 * Whether `vertices` is a zero forcing set.
 *
 * # Safety
 * `g` must be a live handle, `vertices` readable for `len` values (or null
 * when `len` is 0), and `result` writable.
 */
enum ZfStatus zf_is_zero_forcing(const struct ZfGraph *g,
                                 const size_t *vertices,
                                 size_t len,
                                 bool *result);

/**
 * Path cover number.
 *
 * # Safety
 * `g` must be a live handle and `p` writable.
 */
enum ZfStatus zf_path_cover_number(const struct ZfGraph *g, size_t *p);

/**
 * Builds `C(G, f)` from 0-based images `f(i) = images[i]`. Copy-1 vertex
 * `i` is `i` in the result and copy-2 vertex `i` is `n + i`.
 *
 * # Safety
 * `base` must be a live handle, `images` readable for `len` values, and
 * `out` writable.
 */
enum ZfStatus zf_functigraph(const struct ZfGraph *base,
                             const size_t *images,
                             size_t len,
                             struct ZfGraph **out);

/**
 * As [`zf_functigraph`], with the function given as a spec string
 * (`id`, `const:j`, `list:..`, `perm:..`, `mod:k`, `swap`, `bouquetmap`).
 *
 * # Safety
 * `base` must be a live handle, `spec` NUL-terminated, and `out` writable.
 */
enum ZfStatus zf_functigraph_spec(const struct ZfGraph *base,
                                  const char *spec,
                                  struct ZfGraph **out);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *zf_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZF_H */
