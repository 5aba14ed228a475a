/*
 * fourmap C API.
 *
 * Every call returns an fm_status. On failure the out-parameters are left
 * untouched and fm_last_error() describes the problem (per thread). Handles are
 * opaque and owned by the caller; release them with the matching *_free.
 * Strings returned through char** are NUL-terminated JSON or DOT text, owned
 * by the caller, released with fm_string_free.
 */
#ifndef FOURMAP_FOURMAP_H
#define FOURMAP_FOURMAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FOURMAP_BUILDING)
#    define FOURMAP_API __declspec(dllexport)
#  else
#    define FOURMAP_API __declspec(dllimport)
#  endif
#else
#  define FOURMAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
  FM_OK = 0,
  FM_ERR_INVALID_ARGUMENT = 1, /* bad ids, ranges, inconsistent structures */
  FM_ERR_PARSE = 2,            /* malformed JSON or schema mismatch */
  FM_ERR_PRECONDITION = 3,     /* value not accepted by the operation */
  FM_ERR_NULL = 4,             /* required pointer argument was NULL */
  FM_ERR_INTERNAL = 5
} fm_status;

typedef struct fm_map fm_map;             /* faces + shared-edge adjacency */
typedef struct fm_coloring fm_coloring;   /* partial coloring sized to a map */
typedef struct fm_embedding fm_embedding; /* rotation system, optional free segments */
typedef struct fm_voxels fm_voxels;       /* 3-D voxel region complex */

FOURMAP_API const char* fm_last_error(void);
FOURMAP_API const char* fm_status_name(fm_status status);
FOURMAP_API void fm_string_free(char* s);

/* Maps: {"faces": [...], "adjacent": [[f, g], ...]} */
FOURMAP_API fm_status fm_map_from_json(const char* json, fm_map** out);
FOURMAP_API fm_status fm_map_to_json(const fm_map* map, char** out);
/* col may be NULL. show_dotted adds dashed edges for non-adjacent pairs. */
FOURMAP_API fm_status fm_map_to_dot(const fm_map* map, const fm_coloring* col, int show_dotted, char** out);
FOURMAP_API fm_status fm_map_face_count(const fm_map* map, size_t* out);
FOURMAP_API fm_status fm_map_edge_count(const fm_map* map, size_t* out);
FOURMAP_API fm_status fm_map_adjacent(const fm_map* map, const char* f, const char* g, int* out);
FOURMAP_API void fm_map_free(fm_map* map);

/* Colorings: {"palette": k, "assignment": {"A": 0, ...}}, relative to a map. */
FOURMAP_API fm_status fm_coloring_from_json(const fm_map* map, const char* json, fm_coloring** out);
FOURMAP_API fm_status fm_coloring_to_json(const fm_map* map, const fm_coloring* col, char** out);
FOURMAP_API void fm_coloring_free(fm_coloring* col);
FOURMAP_API fm_status fm_verify_coloring(const fm_map* map, const fm_coloring* col, int* ok);

/* Exact chromatic number up to k_max. *chi = 0 and *out = NULL when it
 * exceeds k_max. out may be NULL. */
FOURMAP_API fm_status fm_color_exact(const fm_map* map, int k_max, int* chi, fm_coloring** out);
/* Breadth-first greedy coloring with chronological backtracking. *out = NULL
 * when no coloring with `palette` colors exists. */
FOURMAP_API fm_status fm_color_induction(const fm_map* map, int palette, fm_coloring** out);
/* Outcome JSON: {"result": "colored", ...} or {"result": "blocked", ...}. */
FOURMAP_API fm_status fm_greedy_extend(const fm_map* map, const fm_coloring* col, const char* face, char** out);
/* Exhaustive extension of precol; the precolored subset is its assigned
 * faces. Verdict JSON: {"result": "extendable" | "not_extendable", ...}. */
FOURMAP_API fm_status fm_precoloring_extension(const fm_map* map, const fm_coloring* precol, char** out);

/* Planarity */
FOURMAP_API fm_status fm_is_planar(const fm_map* map, int* out);
/* Requires at least 3 faces. */
FOURMAP_API fm_status fm_edge_bound_filter(const fm_map* map, int* out);
/* *out = NULL when the map is planar, else witness JSON. */
FOURMAP_API fm_status fm_find_kuratowski(const fm_map* map, char** out);
FOURMAP_API fm_status fm_validate_witness(const fm_map* map, const char* witness_json, int* ok);
FOURMAP_API fm_status fm_verify_theorem_3_2(char** out);

/* Embeddings: {"rotation": {"A": ["B", "E", "D"], ...}, "outer_face_removed": b}
 * with optional "free_segments": [["M", "N"], ...]. */
FOURMAP_API fm_status fm_embedding_from_json(const char* json, fm_embedding** out);
FOURMAP_API fm_status fm_embedding_to_json(const fm_embedding* emb, char** out);
FOURMAP_API fm_status fm_embedding_counts(const fm_embedding* emb, int* v, int* e, int* f);
/* Report JSON {"v","e","f","characteristic","expected","consistent"}. */
FOURMAP_API fm_status fm_euler_check(const fm_embedding* emb, char** out, int* consistent);
/* Dual over every traced face of the rotation system. */
FOURMAP_API fm_status fm_embedding_dual(const fm_embedding* emb, fm_map** out);
FOURMAP_API void fm_embedding_free(fm_embedding* emb);

/* Generators. Optional out-parameters may be NULL. */
FOURMAP_API fm_status fm_generate_figure1(fm_embedding** out);
FOURMAP_API fm_status fm_generate_figure1_mn(fm_embedding** out);
FOURMAP_API fm_status fm_generate_base5(fm_map** map, fm_coloring** coloring);
FOURMAP_API fm_status fm_generate_multipartite(int i, int j, int k, int l, fm_map** out);
FOURMAP_API fm_status fm_generate_random(int n_faces, uint64_t seed, fm_map** out);
FOURMAP_API fm_status fm_generate_flower(fm_map** map, fm_coloring** precoloring);
FOURMAP_API fm_status fm_generate_curve(int n_segments, int closed, fm_map** out);
FOURMAP_API fm_status fm_generate_boxes(int m, fm_voxels** out);

/* Voxel complexes: {"grid": [mx, my, mz], "regions": {"R1": [[x, y, z], ...]}} */
FOURMAP_API fm_status fm_voxels_from_json(const char* json, fm_voxels** out);
FOURMAP_API fm_status fm_voxels_to_json(const fm_voxels* cx, char** out);
FOURMAP_API fm_status fm_voxels_adjacency(const fm_voxels* cx, fm_map** out);
FOURMAP_API void fm_voxels_free(fm_voxels* cx);
/* dimension in 1..3; instance may be NULL. *falsified may be NULL. */
FOURMAP_API fm_status fm_test_conjecture(int dimension, const fm_map* map, const char* instance, char** out,
                                         int* falsified);

/* Claims */
typedef struct fm_claim_config {
  uint64_t seed;
  int corpus_size;
  int min_faces;
  int max_faces;
  int curve_max;
  int boxes_m;
  int precolorings_per_map;
} fm_claim_config;

FOURMAP_API void fm_claim_config_default(fm_claim_config* config);
/* Status JSON for one claim. *ok is 0 iff a claim expected to verify did not,
 * or a counterexample failed to replay. config may be NULL for defaults. */
FOURMAP_API fm_status fm_run_claim(const char* claim_id, const fm_claim_config* config, char** out, int* ok);
/* JSON array with every claim, default sizes, given seed. */
FOURMAP_API fm_status fm_run_all(uint64_t seed, char** out, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* FOURMAP_FOURMAP_H */
