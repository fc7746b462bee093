/* C API for the gem crystallization library. Graphs are opaque handles;
 * structured results travel as JSON strings allocated by the library and
 * released with gemc_string_free. All functions return a status code;
 * gemc_last_error() describes the most recent failure on this thread. */

#ifndef GEMC_H
#define GEMC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gemc_graph gemc_graph;

typedef enum {
  GEMC_OK = 0,
  GEMC_ERR_VALIDATION = 1,
  GEMC_ERR_BAD_INPUT = 2,
  GEMC_ERR_MISMATCH = 3
} gemc_status;

/* Most recent error message on the calling thread; empty string when none. */
const char* gemc_last_error(void);

void gemc_graph_free(gemc_graph* g);
void gemc_string_free(char* s);

/* JSON array of catalog family descriptors. */
gemc_status gemc_catalog_list(char** out_json);

/* params_json: {"d": N} | {"q": N} | {"kind": "..."} plus
 * {"orientable": bool} for sphere_bundle. */
gemc_status gemc_catalog_emit(const char* family, const char* params_json, gemc_graph** out);

/* Canonical graph document text. */
gemc_status gemc_graph_decode(const char* text, gemc_graph** out);
gemc_status gemc_graph_encode(const gemc_graph* g, char** out_text);

/* Graphviz text; eps_json is an optional JSON array cyclic permutation. */
gemc_status gemc_graph_dot(const gemc_graph* g, const char* eps_json, char** out_text);

/* Invariant report as JSON. options_json keys (all optional):
 *   "genus": bool       - full permutation sweep (chi/rho per class, minimum)
 *   "h1": [i, j]        - Gagliardi presentation + first homology
 *   "orientable": bool  - bipartiteness */
gemc_status gemc_graph_analyze(const gemc_graph* g, const char* options_json, char** out_json);

/* All shift-k isomorphisms, as a JSON array of
 * {"shift": k, "vertex_map": [[from, to], ...]}. */
gemc_status gemc_shift_isomorphisms(const gemc_graph* g, int shift, char** out_json);

/* Mapping-torus construction. iso_json / final_iso_json are either an
 * isomorphism document or NULL for the lexicographically least shift-1
 * isomorphism (final defaults to iso). When out_intermediates_json is not
 * NULL it receives a JSON array of the intermediate graph documents. */
gemc_status gemc_torus_build(const gemc_graph* base, const char* iso_json,
                             const char* final_iso_json, gemc_graph** out,
                             char** out_intermediates_json);

/* Theorem reproduction harness. theorem is "1.1".."1.4"; params_json may
 * carry "d"/"q"/"h". Returns GEMC_ERR_MISMATCH when some row fails. */
gemc_status gemc_reproduce(const char* theorem, const char* params_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
