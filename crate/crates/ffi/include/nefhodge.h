#ifndef NEFHODGE_H
#define NEFHODGE_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Status codes.
 */
typedef enum NhStatus {
  NH_STATUS_OK = 0,
  NH_STATUS_NULL_POINTER = 1,
  NH_STATUS_INVALID_INPUT = 2,
  NH_STATUS_PARSE = 3,
  NH_STATUS_IO = 4,
  NH_STATUS_NOT_REFLEXIVE = 5,
  NH_STATUS_ORIGIN_NOT_INTERIOR = 6,
  NH_STATUS_OVERFLOW = 7,
  NH_STATUS_OUT_OF_RANGE = 8,
  /*
   An internal consistency check failed.
   */
  NH_STATUS_INCONSISTENT = 9,
  NH_STATUS_PANIC = 10,
} NhStatus;

/*
 Combination of Newton polytopes for a weight block.
 */
typedef enum NhMode {
  NH_MODE_FULL = 0,
  NH_MODE_MINKOWSKI = 1,
} NhMode;

/*
 Hodge numbers of one complete intersection.
 */
typedef struct NhHodge NhHodge;

/*
 The nef partitions of a reflexive polytope.
 */
typedef struct NhPartitions NhPartitions;

/*
 A lattice polytope.
 */
typedef struct NhPolytope NhPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Copy the last error message of this thread into `buf` (NUL-terminated,
 truncated to `len`). Returns the full message length without the NUL.

 # Safety
 `buf` must be null or point to `len` writable bytes.
 */
size_t nh_last_error(char *buf, size_t len);

/*
 Library version as a static NUL-terminated string.
 */
const char *nh_version(void);

/*
 Convex hull of `count` points of dimension `dim`, stored row by row in
 `coords`.

 # Safety
 `coords` must point to `dim * count` integers; `out` must be writable.
 */
enum NhStatus nh_polytope_from_points(size_t dim,
                                      const int64_t *coords,
                                      size_t count,
                                      struct NhPolytope **out);

/*
 Parse a polytope in the text format of the command-line tool.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum NhStatus nh_polytope_parse(const char *source, struct NhPolytope **out);

/*
 The Calabi-Yau polytope of a weight block given in its text format.

 # Safety
 `source` must be a NUL-terminated string; `out` must be writable.
 */
enum NhStatus nh_polytope_from_weights(const char *source,
                                       enum NhMode mode,
                                       struct NhPolytope **out);

/*
 # Safety
 `p` must be null or a handle from this library not yet freed.
 */
void nh_polytope_free(struct NhPolytope *p);

/*
 Ambient dimension, or 0 for a null handle.

 # Safety
 `p` must be null or a live handle.
 */
size_t nh_polytope_dim(const struct NhPolytope *p);

/*
 Number of vertices, or 0 for a null handle.

 # Safety
 `p` must be null or a live handle.
 */
size_t nh_polytope_vertex_count(const struct NhPolytope *p);

/*
 Number of lattice points.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
enum NhStatus nh_polytope_point_count(const struct NhPolytope *p, size_t *out);

/*
 Whether the polytope is reflexive.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
enum NhStatus nh_polytope_is_reflexive(const struct NhPolytope *p, bool *out);

/*
 The dual polytope.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
enum NhStatus nh_polytope_dual(const struct NhPolytope *p, struct NhPolytope **out);

/*
 Nef partitions of codimension `r` of the reflexive polytope `delta`,
 one per unordered partition of the vertices of its dual.

 # Safety
 `delta` must be a live handle; `out` must be writable.
 */
enum NhStatus nh_nef_partitions(const struct NhPolytope *delta,
                                size_t r,
                                struct NhPartitions **out);

/*
 Number of partitions, or 0 for a null handle.

 # Safety
 `list` must be null or a live handle.
 */
size_t nh_partitions_len(const struct NhPartitions *list);

/*
 # Safety
 `list` must be null or a handle from this library not yet freed.
 */
void nh_partitions_free(struct NhPartitions *list);

/*
 String-theoretic Hodge numbers of partition `index`.

 # Safety
 `list` must be a live handle; `out` must be writable.
 */
enum NhStatus nh_hodge_compute(const struct NhPartitions *list, size_t index, struct NhHodge **out);

/*
 # Safety
 `h` must be null or a handle from this library not yet freed.
 */
void nh_hodge_free(struct NhHodge *h);

/*
 Dimension `n` of the variety, or 0 for a null handle.

 # Safety
 `h` must be null or a live handle.
 */
size_t nh_hodge_dim(const struct NhHodge *h);

/*
 `h^{p,q}` for `0 ≤ p, q ≤ n`.

 # Safety
 `h` must be a live handle; `out` must be writable.
 */
enum NhStatus nh_hodge_get(const struct NhHodge *h, size_t p, size_t q, int64_t *out);

/*
 Euler characteristic.

 # Safety
 `h` must be a live handle; `out` must be writable.
 */
enum NhStatus nh_hodge_euler(const struct NhHodge *h, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NEFHODGE_H */
