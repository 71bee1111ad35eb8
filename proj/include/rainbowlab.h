/* C interface to the rainbowlab core.
 *
 * Conventions:
 *   - Every function that can fail returns rb_status; RB_OK is 0.
 *   - On failure, rb_last_error() returns a message for the calling thread.
 *   - Output strings (char**) are heap-allocated; free them with
 *     rb_string_free. Output handles are freed with their *_free function.
 *   - Graph serialization formats: "json", "text", "auto" (parse only).
 *   - Cycle length specs: "any", "exact:<l>", "at-most:<l>" with l >= 3.
 */
#ifndef RAINBOWLAB_H
#define RAINBOWLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RB_API __declspec(dllexport)
#else
#define RB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rb_status {
  RB_OK = 0,
  RB_EINVAL = 1,    /* bad argument or violated precondition */
  RB_EPARSE = 2,    /* malformed input bytes */
  RB_EGUARD = 3,    /* size guard refused the operation */
  RB_ENOTFOUND = 4, /* searched-for object does not exist */
  RB_EINTERNAL = 5  /* unexpected internal failure */
} rb_status;

typedef struct rb_graph rb_graph;
typedef struct rb_graph_enum rb_graph_enum;
typedef struct rb_coloring_enum rb_coloring_enum;

RB_API const char* rb_version(void);

/* Message for the last failing call on this thread ("" when none). The
 * pointer stays valid until the next failing call on the same thread. */
RB_API const char* rb_last_error(void);

RB_API void rb_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* triples is a flat [u0, v0, color0, u1, v1, color1, ...] array. */
RB_API rb_status rb_graph_build(int n, const int* triples, size_t edge_count, rb_graph** out);
RB_API rb_status rb_graph_parse(const char* bytes, const char* format, rb_graph** out);
RB_API rb_status rb_graph_serialize(const rb_graph* g, const char* format, char** out);
RB_API void rb_graph_free(rb_graph* g);

RB_API int rb_graph_n(const rb_graph* g);
RB_API long long rb_graph_edge_count(const rb_graph* g);
RB_API long long rb_graph_color_count(const rb_graph* g);
/* Color of edge (u, v), or -1 when absent. -2 on bad arguments. */
RB_API int rb_graph_color_at(const rb_graph* g, int u, int v);
RB_API rb_status rb_graph_stats_json(const rb_graph* g, char** out);
RB_API rb_status rb_cn_union(const rb_graph* g, int u, int v, long long* out);
RB_API rb_status rb_saturated_degree(const rb_graph* g, int v, int* out);
RB_API rb_status rb_induced_subgraph(const rb_graph* g, const int* vertices, size_t count,
                                     rb_graph** out);
RB_API rb_status rb_delete_vertex(const rb_graph* g, int v, rb_graph** out);
/* Isomorphism-invariant key, hex-encoded. Equal keys iff isomorphic under a
 * vertex permutation plus color renaming. */
RB_API rb_status rb_canonical_key_hex(const rb_graph* g, char** out);

/* ---- enumeration ------------------------------------------------------- */

/* One representative per isomorphism class of underlying graphs on n
 * vertices. rb_graph_enum_next returns RB_ENOTFOUND when exhausted. */
RB_API rb_status rb_graph_enum_new(int n, rb_graph_enum** out);
RB_API rb_status rb_graph_enum_next(rb_graph_enum* e, rb_graph** out);
RB_API void rb_graph_enum_free(rb_graph_enum* e);

/* Colorings of a fixed underlying graph. exhaustive != 0 walks all set
 * partitions of the edge set (RB_ENOTFOUND at the end); exhaustive == 0 is an
 * endless seeded random stream. */
RB_API rb_status rb_coloring_enum_new(const rb_graph* underlying, int exhaustive, uint64_t seed,
                                      rb_coloring_enum** out);
RB_API rb_status rb_coloring_enum_next(rb_coloring_enum* e, rb_graph** out);
RB_API void rb_coloring_enum_free(rb_coloring_enum* e);

RB_API rb_status rb_random_coloring(const rb_graph* underlying, int palette, uint64_t seed,
                                    rb_graph** out);

/* ---- rainbow structures ------------------------------------------------ */

/* First rainbow cycle matching the length spec, as
 * {"vertices":[...],"colors":[...]}. RB_ENOTFOUND when none exists. */
RB_API rb_status rb_find_rainbow_cycle(const rb_graph* g, const char* length_spec,
                                       char** witness_json);
RB_API rb_status rb_count_triangles(const rb_graph* g, long long* out);
RB_API rb_status rb_count_rainbow_triangles(const rb_graph* g, long long* out);
/* Distinct rainbow 4-cycles, counting stops at limit. */
RB_API rb_status rb_count_rainbow_c4(const rb_graph* g, long long limit, long long* out);
/* k pairwise vertex-disjoint rainbow cycles. result_json:
 * {"outcome":"found"|"absent"|"unknown","cycles":[...]}. */
RB_API rb_status rb_find_disjoint_rainbow_cycles(const rb_graph* g, int k,
                                                 const char* length_spec, char** result_json);

/* ---- families ----------------------------------------------------------- */

/* family: "g0" (n >= 1), "g1" (n >= 3), "gk" (n >= 3k), "rainbow-bipartite"
 * (uses a and b; n and k ignored). tree_json may be NULL; when requested it
 * receives the composition tree for g0/g1/gk and NULL for rainbow-bipartite. */
RB_API rb_status rb_gen_family(const char* family, int n, int k, int a, int b, uint64_t seed,
                               rb_graph** out, char** tree_json);
/* Witness tree when g belongs to the zero- or one-rainbow-triangle join
 * family; RB_ENOTFOUND otherwise. */
RB_API rb_status rb_membership_g0(const rb_graph* g, char** tree_json);
RB_API rb_status rb_membership_g1(const rb_graph* g, char** tree_json);
RB_API rb_status rb_gen_from_tree_json(const char* tree_json, rb_graph** out);
RB_API rb_status rb_is_gallai(const rb_graph* g, int* out);
RB_API rb_status rb_gallai_decompose(const rb_graph* g, char** decomposition_json);

/* ---- constructive ------------------------------------------------------- */

/* Local-search bipartition with the per-vertex degree guarantee; JSON holds
 * sides, potential, and the move log. */
RB_API rb_status rb_spanning_bipartite(const rb_graph* g, char** result_json);
/* Disjoint rainbow cycle packing heuristic with its stage trace. result_json:
 * {"found":bool,"cycles":[...],"trace":{...}}. */
RB_API rb_status rb_reduce(const rb_graph* g, int k, int constant, char** result_json);

/* ---- verification harness ----------------------------------------------- */

/* JSON array of all check identifiers. */
RB_API rb_status rb_check_ids(char** json_array);
/* config_json fields (all optional): n_min, n_max, mode
 * ("exhaustive"|"sample"), samples, seed, k, constant, workers. Unknown
 * fields are rejected. format: "json" or "text". violations_total may be
 * NULL. */
RB_API rb_status rb_run_check(const char* check_id, const char* config_json, const char* format,
                              char** report, long long* violations_total);
/* mode: "exhaustive" | "witness-only". */
RB_API rb_status rb_search_extremal(int n, int k, const char* mode, uint64_t seed,
                                    const char* format, char** report);
/* Shrinks a violating instance by vertex deletions and color merges;
 * RB_EINVAL when g does not violate the check under the config. */
RB_API rb_status rb_minimize(const rb_graph* g, const char* check_id, const char* config_json,
                             rb_graph** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAINBOWLAB_H */
