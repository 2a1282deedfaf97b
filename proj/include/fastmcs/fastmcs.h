/*
 * fastmcs C API: minimal path set / minimal cut set computation for
 * undirected network topologies, exposed as a shared library.
 *
 * Conventions:
 *   - Every object is an opaque handle created by a fastmcs_*_create /
 *     _parse / _compute call and released by the matching _free call.
 *   - Functions return fastmcs_status; FASTMCS_OK means the out
 *     parameters are valid. On failure fastmcs_last_error() carries a
 *     human-readable message for the calling thread.
 *   - Strings returned through char** out parameters are heap-allocated
 *     and must be released with fastmcs_string_free().
 */

#ifndef FASTMCS_H
#define FASTMCS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FASTMCS_API __declspec(dllexport)
#else
#define FASTMCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fastmcs_status {
  FASTMCS_OK = 0,
  FASTMCS_ERROR_PARSE = 1,        /* malformed topology / CSV input */
  FASTMCS_ERROR_INVALID_ARGUMENT = 2,
  FASTMCS_ERROR_INVALID_PAIR = 3, /* unknown node, or src == dst */
  FASTMCS_ERROR_TIMEOUT = 4,      /* engine budget exhausted */
  FASTMCS_ERROR_IO = 5,
  FASTMCS_ERROR_INTERNAL = 6
} fastmcs_status;

typedef enum fastmcs_format {
  FASTMCS_FORMAT_AUTO = 0,      /* JSON when the first byte is '{' */
  FASTMCS_FORMAT_EDGE_LIST = 1, /* "<label> <label>" per line, # comments */
  FASTMCS_FORMAT_JSON = 2       /* {"nodes":[...], "edges":[[..],..]} */
} fastmcs_format;

typedef enum fastmcs_method {
  FASTMCS_METHOD_FAST = 0,
  FASTMCS_METHOD_SHANNON = 1,
  FASTMCS_METHOD_COMBINATORIAL = 2
} fastmcs_method;

typedef struct fastmcs_topology fastmcs_topology;
typedef struct fastmcs_mps fastmcs_mps;
typedef struct fastmcs_bench fastmcs_bench;

FASTMCS_API const char* fastmcs_version(void);

/* Message describing the most recent failure on this thread. Never NULL. */
FASTMCS_API const char* fastmcs_last_error(void);

FASTMCS_API void fastmcs_string_free(char* s);

/* ---- topology ---------------------------------------------------- */

FASTMCS_API fastmcs_status fastmcs_topology_parse(const char* text, size_t text_len,
                                                  fastmcs_format format, const char* name,
                                                  fastmcs_topology** out);

/* Seeded connected random graph (see CLI --generate). */
FASTMCS_API fastmcs_status fastmcs_topology_generate(uint32_t num_nodes, double edge_probability,
                                                     uint64_t seed, fastmcs_topology** out);

FASTMCS_API void fastmcs_topology_free(fastmcs_topology* t);

FASTMCS_API const char* fastmcs_topology_name(const fastmcs_topology* t);
FASTMCS_API uint32_t fastmcs_topology_num_nodes(const fastmcs_topology* t);
FASTMCS_API uint32_t fastmcs_topology_num_edges(const fastmcs_topology* t);

/* Canonical JSON form; parsing it back yields an identical topology. */
FASTMCS_API fastmcs_status fastmcs_topology_to_json(const fastmcs_topology* t, char** out);

/* ---- minimal path sets ------------------------------------------- */

FASTMCS_API fastmcs_status fastmcs_mps_compute(const fastmcs_topology* t, const char* src,
                                               const char* dst, int include_edges,
                                               fastmcs_mps** out);
FASTMCS_API void fastmcs_mps_free(fastmcs_mps* m);

FASTMCS_API uint64_t fastmcs_mps_num_paths(const fastmcs_mps* m);
/* JSON array of label arrays, one per path (endpoints included). */
FASTMCS_API fastmcs_status fastmcs_mps_paths_json(const fastmcs_mps* m, char** out);
/* JSON array of arrays: the interior element sets in canonical order. */
FASTMCS_API fastmcs_status fastmcs_mps_interiors_json(const fastmcs_mps* m, char** out);
/* Plain-text table, one "A - B - C" line per path. */
FASTMCS_API fastmcs_status fastmcs_mps_paths_table(const fastmcs_mps* m, char** out);

/* ---- minimal cut sets -------------------------------------------- */

/*
 * Computes the MCS family for a pair with the chosen engine.
 * timeout_ms == 0 runs without a budget; a hit budget returns
 * FASTMCS_ERROR_TIMEOUT. mcs_json receives a JSON array of label arrays
 * in canonical order; num_mcs (optional) its size.
 */
FASTMCS_API fastmcs_status fastmcs_mcs_compute(const fastmcs_topology* t, const char* src,
                                               const char* dst, fastmcs_method method,
                                               int include_edges, int64_t timeout_ms,
                                               char** mcs_json, uint64_t* num_mcs);

/* Renders a family JSON (as produced above) as plain text, one set per
 * line with space-separated labels. */
FASTMCS_API fastmcs_status fastmcs_family_json_to_table(const char* family_json, char** out);

/*
 * Definition-level verification of a claimed MCS family (node universe):
 * sound => every member disconnects the pair minimally; complete is 1/0,
 * or -1 when the completeness check was skipped because the interior
 * universe exceeds the internal threshold.
 */
FASTMCS_API fastmcs_status fastmcs_mcs_verify(const fastmcs_topology* t, const char* src,
                                              const char* dst, const char* mcs_json,
                                              int* sound, int* complete);

/* ---- benchmark ----------------------------------------------------*/

typedef struct fastmcs_bench_options {
  int64_t timeout_ms;   /* per-engine budget, 0 = unlimited */
  uint32_t repetitions; /* engine timing = median of N runs, 0 -> 3 */
  uint32_t workers;     /* pair-level worker pool, 0 -> 1 */
  /* NULL = every unordered pair; else "S:T,A:B" label pairs. */
  const char* pairs;
  int include_edges;
} fastmcs_bench_options;

FASTMCS_API fastmcs_status fastmcs_bench_run(const fastmcs_topology* const* topologies,
                                             size_t num_topologies,
                                             const fastmcs_method* methods, size_t num_methods,
                                             const fastmcs_bench_options* options,
                                             fastmcs_bench** out);
FASTMCS_API void fastmcs_bench_free(fastmcs_bench* b);

/* 1 when every record agreed with the reference engine. */
FASTMCS_API int fastmcs_bench_all_agree(const fastmcs_bench* b);
FASTMCS_API fastmcs_status fastmcs_bench_records_csv(const fastmcs_bench* b, char** out);
FASTMCS_API fastmcs_status fastmcs_bench_summary_json(const fastmcs_bench* b, char** out);
FASTMCS_API fastmcs_status fastmcs_bench_plot_csv(const fastmcs_bench* b, char** out);

/*
 * Re-aggregates a records CSV (as written by fastmcs_bench_records_csv)
 * into the plot CSV. Non-ok records are excluded; when notes is non-NULL
 * it receives one line per exclusion (empty string when none).
 */
FASTMCS_API fastmcs_status fastmcs_plot_csv_from_records(const char* records_csv,
                                                         char** plot_csv, char** notes);

#ifdef __cplusplus
}
#endif

#endif /* FASTMCS_H */
