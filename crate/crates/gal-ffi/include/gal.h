/* C interface to the gal graph-parameter laboratory. */

#ifndef GAL_H
#define GAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum GalStatus {
  GAL_STATUS_OK = 0,
  GAL_STATUS_NULL_POINTER = 1,
  GAL_STATUS_UTF8 = 2,
  GAL_STATUS_PARSE = 3,
  GAL_STATUS_INVALID_ARGUMENT = 4,
  GAL_STATUS_GUARD_EXCEEDED = 5,
  GAL_STATUS_SOLVER_FAILED = 6,
  GAL_STATUS_PANIC = 7,
} GalStatus;

/**
 * Theta-family selector for `gal_theta`.
 */
typedef enum GalThetaVariant {
  GAL_THETA_VARIANT_LOVASZ = 0,
  GAL_THETA_VARIANT_SCHRIJVER_MINUS = 1,
  GAL_THETA_VARIANT_SZEGEDY_PLUS = 2,
} GalThetaVariant;

/**
 * Opaque handle: a graph plus its vertex weights.
 */
typedef struct GalGraph GalGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Most recent error message for this thread; never null.
 */
const char *gal_last_error_message(void);

/**
 * Parses a graph in the `p gal` text format.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` a valid pointer.
 */
enum GalStatus gal_graph_parse(const char *text, struct GalGraph **out);

/**
 * Builds a named family: cycle, complete, empty, petersen, random.
 *
 * # Safety
 * `family` must be a valid NUL-terminated string; `out` a valid pointer.
 */
enum GalStatus gal_graph_generate(const char *family,
                                  uint32_t n,
                                  double p,
                                  uint64_t seed,
                                  struct GalGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void gal_graph_free(struct GalGraph *g);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void gal_string_free(char *s);

/**
 * # Safety
 * `g` must be a valid handle; `out` a valid pointer.
 */
enum GalStatus gal_graph_vertex_count(const struct GalGraph *g, uint32_t *out);

/**
 * # Safety
 * `g` must be a valid handle; `out` a valid pointer.
 */
enum GalStatus gal_graph_edge_count(const struct GalGraph *g, uint64_t *out);

/**
 * Serializes in the canonical `p gal` format; free with `gal_string_free`.
 *
 * # Safety
 * `g` must be a valid handle; `out` a valid pointer.
 */
enum GalStatus gal_graph_write(const struct GalGraph *g, char **out);

/**
 * # Safety
 * `a` and `b` must be valid handles; `out` a valid pointer.
 */
enum GalStatus gal_graph_strong_product(const struct GalGraph *a,
                                        const struct GalGraph *b,
                                        struct GalGraph **out);

/**
 * # Safety
 * `a` and `b` must be valid handles; `out` a valid pointer.
 */
enum GalStatus gal_graph_disjunctive_product(const struct GalGraph *a,
                                             const struct GalGraph *b,
                                             struct GalGraph **out);

/**
 * # Safety
 * `g` must be a valid handle; `out` a valid pointer.
 */
enum GalStatus gal_graph_complement(const struct GalGraph *g, struct GalGraph **out);

/**
 * Blow-up with per-vertex multiplicities (`len` must equal the vertex
 * count).
 *
 * # Safety
 * `g` must be a valid handle, `multiplicities` must point to `len` values,
 * `out` must be a valid pointer.
 */
enum GalStatus gal_graph_blowup(const struct GalGraph *g,
                                const uint64_t *multiplicities,
                                uintptr_t len,
                                struct GalGraph **out);

/**
 * Exact independence number (unweighted).
 *
 * # Safety
 * `g` must be a valid handle; `out` a valid pointer.
 */
enum GalStatus gal_alpha(const struct GalGraph *g, uint64_t *out);

/**
 * Exact fractional packing number as a canonical rational string, e.g.
 * `5/2`; free with `gal_string_free`.
 *
 * # Safety
 * `g` must be a valid handle; `out` a valid pointer.
 */
enum GalStatus gal_alpha_star(const struct GalGraph *g, char **out);

/**
 * Exact clique cover number.
 *
 * # Safety
 * `g` must be a valid handle; `out` a valid pointer.
 */
enum GalStatus gal_sigma(const struct GalGraph *g, uint64_t *out);

/**
 * Exact chromatic number.
 *
 * # Safety
 * `g` must be a valid handle; `out` a valid pointer.
 */
enum GalStatus gal_chi(const struct GalGraph *g, uint64_t *out);

/**
 * Certified theta-family value using the handle's weights; writes the value
 * and the duality gap. Pass `tol_gap <= 0` for the default 1e-7.
 *
 * # Safety
 * `g` must be a valid handle; `value` and `gap` valid pointers.
 */
enum GalStatus gal_theta(const struct GalGraph *g,
                         enum GalThetaVariant variant,
                         double tol_gap,
                         double *value,
                         double *gap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAL_H */
