#ifndef GRIDFARY_H
#define GRIDFARY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  // Chosen from the graph class.
  GF_ALGORITHM_AUTO = 0,
  GF_ALGORITHM_STAR = 1,
  GF_ALGORITHM_TREE = 2,
  GF_ALGORITHM_CACTUS = 3,
} GfAlgorithm;

typedef enum {
  GF_STATUS_OK = 0,
  GF_STATUS_NULL_POINTER = 1,
  GF_STATUS_INVALID_INPUT = 2,
  GF_STATUS_UNSUPPORTED = 3,
  GF_STATUS_OVERFLOW = 4,
  GF_STATUS_VERIFICATION_FAILED = 5,
  GF_STATUS_INTERNAL = 6,
  GF_STATUS_BUFFER_TOO_SMALL = 7,
  GF_STATUS_PANIC = 8,
} GfStatus;

// Opaque drawing handle.
typedef struct GfDrawing GfDrawing;

// Opaque graph handle.
typedef struct GfGraph GfGraph;

// One drawn edge: `v` sits at `u + (dx, dy)` and `dx² + dy² = length²`.
typedef struct {
  uintptr_t u;
  uintptr_t v;
  int64_t dx;
  int64_t dy;
  uint64_t length;
} GfEdge;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Description of the last failure on this thread, or null after a success.
const char *gf_last_error(void);

// Build a graph on vertices `0..n` from `m` edges stored as `2m`
// consecutive endpoint ids.
//
// # Safety
// `edges` must point to `2 * m` readable values (may be null when `m == 0`);
// `out` must be writable.
GfStatus gf_graph_new(uintptr_t n, const uintptr_t *edges, uintptr_t m, GfGraph **out);

// Parse a `grid-fary-graph-v1` document.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
GfStatus gf_graph_from_json(const char *json, GfGraph **out);

// # Safety
// `graph` must come from `gf_graph_new` or `gf_graph_from_json`.
GfStatus gf_graph_set_root(GfGraph *graph, uintptr_t root);

// Attach a rotation system in compressed form: the neighbours of vertex
// `v` in cyclic order are `neighbors[offsets[v] .. offsets[v + 1]]`.
//
// # Safety
// `offsets` must hold `n + 1` values and `neighbors` `offsets[n]` values.
GfStatus gf_graph_set_rotation(GfGraph *graph,
                               const uintptr_t *offsets,
                               const uintptr_t *neighbors);

// # Safety
// `graph` must be null or a live handle; it is invalid afterwards.
void gf_graph_free(GfGraph *graph);

// Draw and self-certify. Fails with `VerificationFailed` if the drawing
// does not pass every check.
//
// # Safety
// `graph` must be a live handle; `out` must be writable.
GfStatus gf_draw(const GfGraph *graph, GfAlgorithm algorithm, GfDrawing **out);

// Parse a `grid-fary-drawing-v1` document.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
GfStatus gf_drawing_from_json(const char *json, GfDrawing **out);

// # Safety
// `drawing` must be null or a live handle.
uintptr_t gf_drawing_vertex_count(const GfDrawing *drawing);

// # Safety
// `drawing` must be null or a live handle.
uintptr_t gf_drawing_edge_count(const GfDrawing *drawing);

// Number of primitive triples the drawing consumed.
//
// # Safety
// `drawing` must be null or a live handle.
uintptr_t gf_drawing_triples_used(const GfDrawing *drawing);

// Copy positions as `x0, y0, x1, y1, ...` into `xy`, which holds `len` values.
//
// # Safety
// `xy` must point to `len` writable values.
GfStatus gf_drawing_positions(const GfDrawing *drawing, int64_t *xy, uintptr_t len);

// Copy edge records into `edges`, which holds `len` entries.
//
// # Safety
// `edges` must point to `len` writable entries.
GfStatus gf_drawing_edges(const GfDrawing *drawing, GfEdge *edges, uintptr_t len);

// Serialize as `grid-fary-drawing-v1`. Release the string with `gf_string_free`.
//
// # Safety
// `drawing` must be a live handle; `out` must be writable.
GfStatus gf_drawing_to_json(const GfDrawing *drawing, char **out);

// # Safety
// `s` must be null or come from this library.
void gf_string_free(char *s);

// # Safety
// `drawing` must be null or a live handle; it is invalid afterwards.
void gf_drawing_free(GfDrawing *drawing);

// Certify a drawing. With a graph the bound checks run against the
// drawing's algorithm; without one only integrality and planarity are
// checked. `passed` receives 1 or 0 and `violations` the violation count;
// either may be null.
//
// # Safety
// `drawing` must be a live handle, `graph` null or a live handle.
GfStatus gf_verify(const GfDrawing *drawing,
                   const GfGraph *graph,
                   int32_t *passed,
                   uintptr_t *violations);

// Write the first `k` primitive triples as `x, y, ℓ` rows into `out`
// (`len ≥ 3k`), in generator order or, when `angle_sorted` is non-zero,
// by increasing slope.
//
// # Safety
// `out` must point to `len` writable values.
GfStatus gf_triples(uintptr_t k, int32_t angle_sorted, uint64_t *out, uintptr_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRIDFARY_H */
