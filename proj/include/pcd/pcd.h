/*
 * C interface to the polarized community discovery library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a pcd_status; on failure the message of the
 * most recent error on the calling thread is available from
 * pcd_last_error(). Handles are not thread-safe for mutation, but graphs and
 * label sets may be shared read-only between threads (e.g. concurrent
 * pcd_solve calls over one graph).
 */
#ifndef PCD_PCD_H
#define PCD_PCD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PCD_BUILDING_LIBRARY)
#    define PCD_API __declspec(dllexport)
#  else
#    define PCD_API __declspec(dllimport)
#  endif
#else
#  define PCD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcd_status {
    PCD_OK = 0,
    PCD_ERR_INVALID_ARGUMENT = 1,
    PCD_ERR_PARSE = 2,
    PCD_ERR_IO = 3,
    PCD_ERR_OUT_OF_RANGE = 4,
    PCD_ERR_RESOURCE = 5,
    PCD_ERR_MISMATCH = 6,
    PCD_ERR_INTERNAL = 7
} pcd_status;

typedef struct pcd_graph pcd_graph;
typedef struct pcd_labels pcd_labels;
typedef struct pcd_result pcd_result;
typedef struct pcd_metrics pcd_metrics;

PCD_API const char* pcd_version(void);
PCD_API const char* pcd_status_string(pcd_status status);
/* Message of the last failed call on this thread; "" if none. */
PCD_API const char* pcd_last_error(void);

/* ---- graphs -------------------------------------------------------- */

typedef enum pcd_duplicate_policy { PCD_DUPLICATE_ERROR = 0, PCD_DUPLICATE_SUM = 1 } pcd_duplicate_policy;
typedef enum pcd_asymmetry_policy {
    PCD_ASYMMETRY_ERROR = 0,
    PCD_ASYMMETRY_SUM_THEN_HALVE = 1
} pcd_asymmetry_policy;

typedef struct pcd_parse_options {
    int index_base; /* 0 or 1 */
    pcd_duplicate_policy duplicate_policy;
    pcd_asymmetry_policy asymmetry_policy;
    char comment_prefix;
    size_t n_override; /* 0 = infer from ids */
} pcd_parse_options;

PCD_API void pcd_parse_options_init(pcd_parse_options* opts);

/* opts may be NULL for defaults. On PCD_ERR_PARSE, *error_line (if not
 * NULL) receives the 1-based offending line, or 0. */
PCD_API pcd_status pcd_graph_parse_file(const char* path, const pcd_parse_options* opts, pcd_graph** out,
                                        size_t* error_line);
PCD_API pcd_status pcd_graph_parse_string(const char* text, const pcd_parse_options* opts, pcd_graph** out,
                                          size_t* error_line);
/* Edges given as parallel arrays (each undirected edge once). */
PCD_API pcd_status pcd_graph_from_edges(size_t n, size_t edge_count, const uint32_t* u, const uint32_t* v,
                                        const double* w, pcd_graph** out);
PCD_API pcd_status pcd_graph_write_file(const pcd_graph* g, const char* path);
PCD_API void pcd_graph_free(pcd_graph* g);

PCD_API size_t pcd_graph_vertex_count(const pcd_graph* g);
PCD_API size_t pcd_graph_edge_count(const pcd_graph* g);
PCD_API double pcd_graph_h0_undirected(const pcd_graph* g);
PCD_API double pcd_graph_h0_ordered(const pcd_graph* g);
PCD_API pcd_status pcd_graph_row_abs_sum(const pcd_graph* g, size_t vertex, double* out);
/* Copies up to capacity neighbors of vertex; *count receives the degree. */
PCD_API pcd_status pcd_graph_neighbors(const pcd_graph* g, size_t vertex, uint32_t* ids, double* weights,
                                       size_t capacity, size_t* count);

/* ---- labels -------------------------------------------------------- */

PCD_API pcd_status pcd_labels_create(const uint32_t* labels, size_t n, size_t k, pcd_labels** out);
/* JSON {"k","labels"} or CSV vertex,label; k_hint 0 = infer. */
PCD_API pcd_status pcd_labels_read_file(const char* path, size_t k_hint, pcd_labels** out);
PCD_API pcd_status pcd_labels_random(size_t n, size_t k, uint64_t seed, int non_neutral_only, pcd_labels** out);
PCD_API pcd_status pcd_labels_write_csv(const pcd_labels* l, const char* path);
PCD_API pcd_status pcd_labels_write_json(const pcd_labels* l, const char* path);
PCD_API void pcd_labels_free(pcd_labels* l);
PCD_API size_t pcd_labels_size(const pcd_labels* l);
PCD_API size_t pcd_labels_k(const pcd_labels* l);
PCD_API const uint32_t* pcd_labels_data(const pcd_labels* l);

/* ---- synthetic benchmark ------------------------------------------- */

typedef struct pcd_ssbm_params {
    size_t n;
    size_t k;
    size_t ell;
    double eta;
    double rho;
    uint64_t seed;
} pcd_ssbm_params;

PCD_API pcd_status pcd_ssbm_group_sizes(size_t k, size_t ell, double rho, size_t* sizes_out);
/* truth may be NULL. */
PCD_API pcd_status pcd_ssbm_generate(const pcd_ssbm_params* params, pcd_graph** graph, pcd_labels** truth);

/* ---- solver -------------------------------------------------------- */

typedef enum pcd_variant { PCD_VARIANT_NAIVE = 0, PCD_VARIANT_GRADIENT_DIRECT = 1, PCD_VARIANT_LSPCD = 2 } pcd_variant;
typedef enum pcd_convergence {
    PCD_CONVERGENCE_WINDOW_THEN_SWEEP = 0,
    PCD_CONVERGENCE_SWEEP_ONLY = 1
} pcd_convergence;
typedef enum pcd_init { PCD_INIT_UNIFORM_WITH_NEUTRAL = 0, PCD_INIT_NON_NEUTRAL_ONLY = 1 } pcd_init;

typedef struct pcd_solver_config {
    size_t k;
    int alpha_auto; /* nonzero: alpha = 1/(k-1) (0 for k = 1) */
    double alpha;
    double beta;
    uint64_t seed;
    pcd_variant variant;
    uint64_t max_steps; /* UINT64_MAX = unbounded */
    pcd_convergence convergence;
    pcd_init init;
    uint64_t track_gap_every; /* 0 = off */
    uint64_t trace_every;     /* 0 = every n steps */
    size_t max_dense_entries; /* cap on n*k for the lspcd score table */
} pcd_solver_config;

PCD_API void pcd_solver_config_init(pcd_solver_config* cfg);
PCD_API pcd_status pcd_variant_parse(const char* name, pcd_variant* out);
PCD_API const char* pcd_variant_name(pcd_variant v);

/* initial may be NULL for a random start drawn from cfg->seed. */
PCD_API pcd_status pcd_solve(const pcd_graph* g, const pcd_solver_config* cfg, const pcd_labels* initial,
                             pcd_result** out);
PCD_API void pcd_result_free(pcd_result* r);
PCD_API double pcd_result_objective(const pcd_result* r);
PCD_API double pcd_result_polarity(const pcd_result* r);
PCD_API double pcd_result_alpha(const pcd_result* r);
PCD_API int pcd_result_converged(const pcd_result* r);
PCD_API uint64_t pcd_result_steps(const pcd_result* r);
PCD_API uint64_t pcd_result_moves(const pcd_result* r);
PCD_API double pcd_result_time_ms(const pcd_result* r);
/* Borrowed; valid while r lives. */
PCD_API const pcd_labels* pcd_result_labels(const pcd_result* r);
/* Result JSON document; borrowed, valid while r lives. */
PCD_API const char* pcd_result_json(const pcd_result* r);

/* ---- objective and metrics ----------------------------------------- */

PCD_API pcd_status pcd_objective(const pcd_graph* g, const pcd_labels* l, double alpha, double beta, double* out);
PCD_API pcd_status pcd_polarity(const pcd_graph* g, const pcd_labels* l, double alpha, double* out);
PCD_API pcd_status pcd_f1_score(const pcd_labels* pred, const pcd_labels* truth, double* out);
/* sizes: k cluster sizes. */
PCD_API pcd_status pcd_imbalance_factor(const size_t* sizes, size_t k, double xi, double* out);

typedef struct pcd_metrics_values {
    size_t size;
    size_t k_nonempty;
    double polarity;
    double imbalance_factor;
    double mac;
    double mao;
    double cc_plus;
    double cc_minus;
    double density;
    double isolation;
    int has_f1;
    double f1;
    int degenerate; /* nonzero if any degenerate flag is set */
} pcd_metrics_values;

/* truth may be NULL. */
PCD_API pcd_status pcd_evaluate(const pcd_graph* g, const pcd_labels* l, double alpha, double xi,
                                const pcd_labels* truth, pcd_metrics** out);
PCD_API void pcd_metrics_free(pcd_metrics* m);
PCD_API void pcd_metrics_get(const pcd_metrics* m, pcd_metrics_values* out);
/* Borrowed; valid while m lives. */
PCD_API const char* pcd_metrics_json(const pcd_metrics* m);

#ifdef __cplusplus
}
#endif

#endif /* PCD_PCD_H */
