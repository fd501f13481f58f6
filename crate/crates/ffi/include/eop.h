#ifndef EOP_H
#define EOP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define EOP_CLASS_FLAG_PROPER_INTERVAL 1

#define EOP_CLASS_FLAG_BLOCK 2

#define EOP_CLASS_FLAG_SPLIT 4

#define EOP_CLASS_FLAG_CHORDAL 8

typedef enum {
  EOP_STATUS_OK = 0,
  EOP_STATUS_NOT_IN_CLASS = 1,
  EOP_STATUS_INVALID_INPUT = 2,
  EOP_STATUS_INTERNAL = 3,
  EOP_STATUS_NULL_POINTER = 5,
  EOP_STATUS_BUDGET_EXCEEDED = 6,
} EopStatus;

typedef enum {
  EOP_FORMAT_EDGELIST = 0,
  EOP_FORMAT_DIMACS = 1,
} EopFormat;

/**
 * Solver selection; also reports which solver ran.
 */
typedef enum {
  EOP_CLASS_AUTO = 0,
  EOP_CLASS_PROPER_INTERVAL = 1,
  EOP_CLASS_BLOCK = 2,
  EOP_CLASS_SPLIT = 3,
  EOP_CLASS_BRUTE = 4,
} EopClass;

/**
 * Opaque graph handle.
 */
typedef struct EopGraph EopGraph;

/**
 * Opaque solution handle.
 */
typedef struct EopSolution EopSolution;

/**
 * Builds a graph on `n` vertices from `m` edges given as `2 * m`
 * consecutive endpoints (0-based). Repeated edges are merged.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be null when `m` is 0);
 * `out` must be writable.
 */
EopStatus eop_graph_new(size_t n, const size_t *edges, size_t m, EopGraph **out);

/**
 * Parses a NUL-terminated graph text in the given format.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
EopStatus eop_graph_parse(const char *text, EopFormat format, EopGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void eop_graph_free(EopGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t eop_graph_vertex_count(const EopGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t eop_graph_edge_count(const EopGraph *g);

/**
 * Writes a bitwise OR of the `EOP_CLASS_FLAG_*` constants.
 *
 * # Safety
 * `g` must be a live handle and `flags` writable.
 */
EopStatus eop_classify(const EopGraph *g, uint32_t *flags);

/**
 * Solves with the requested class. `oracle_max_edges` bounds the
 * exhaustive fallback (capped at 128).
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
EopStatus eop_solve(const EopGraph *g, EopClass class_, size_t oracle_max_edges, EopSolution **out);

/**
 * # Safety
 * `s` must be null or a handle from this library not yet freed.
 */
void eop_solution_free(EopSolution *s);

/**
 * Packing number, or 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t eop_solution_value(const EopSolution *s);

/**
 * Solver that produced the solution; `EOP_CLASS_AUTO` for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
EopClass eop_solution_class(const EopSolution *s);

/**
 * Number of witness edges, or 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t eop_solution_witness_len(const EopSolution *s);

/**
 * Copies the witness as sorted `(u, v)` pairs into `buf`, which holds
 * `capacity` pairs (`2 * capacity` values).
 *
 * # Safety
 * `s` must be a live handle; `buf` must be writable for `2 * capacity`
 * values (or null when `capacity` is 0).
 */
EopStatus eop_solution_witness(const EopSolution *s, size_t *buf, size_t capacity);

/**
 * Checks whether `k` edges, given as `2 * k` endpoints, form an edge open
 * packing of `g`. Naming a non-edge is an input error.
 *
 * # Safety
 * `g` must be a live handle, `pairs` readable for `2 * k` values (or null
 * when `k` is 0) and `result` writable.
 */
EopStatus eop_is_eop_set(const EopGraph *g, const size_t *pairs, size_t k, bool *result);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *eop_last_error_message(void);

#endif  /* EOP_H */
