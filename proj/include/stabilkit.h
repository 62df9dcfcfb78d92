/* stabilkit — stability and minimum fractional additive stabilizers for
 * unit-weight matching instances.
 *
 * C interface to the shared library. All objects are opaque handles owned
 * by the library; every function returns a status code. Functions that can
 * fail with a message set *err to a malloc'd string the caller releases
 * with stabil_string_free (err may be NULL when the message is not
 * wanted). Output strings likewise belong to the caller.
 */
#ifndef STABILKIT_H
#define STABILKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stabil_status {
    STABIL_OK = 0,
    STABIL_ERR_PARSE = 1,        /* malformed instance or certificate text */
    STABIL_ERR_PRECONDITION = 2, /* operation precondition violated */
    STABIL_ERR_BOUND = 3,        /* instance exceeds a configured size bound */
    STABIL_ERR_ARGUMENT = 4,     /* bad argument (null handle, unknown enum) */
    STABIL_ERR_INTERNAL = 5      /* library invariant failed; report a bug */
} stabil_status;

typedef enum stabil_algo {
    STABIL_ALGO_EXACT_FPT = 0,
    STABIL_ALGO_FACTOR_CRITICAL = 1,
    STABIL_ALGO_APPROX = 2,
    STABIL_ALGO_TUTTE_ALL = 3,
    STABIL_ALGO_ORACLE = 4
} stabil_algo;

typedef struct stabil_graph stabil_graph;
typedef struct stabil_solution stabil_solution;

void stabil_string_free(char* s);

/* Instances (text format: "n m" header, one "u v" line per edge,
 * '#' comments allowed). */
stabil_status stabil_graph_parse(const char* text, stabil_graph** out, char** err);
stabil_status stabil_graph_to_text(const stabil_graph* g, char** out);
int stabil_graph_vertex_count(const stabil_graph* g);
int stabil_graph_edge_count(const stabil_graph* g);
void stabil_graph_free(stabil_graph* g);

/* Gallai-Edmonds decomposition as line-oriented key=value text. */
stabil_status stabil_ged_text(const stabil_graph* g, char** out);

/* *stable = 1 iff the graph is stable. */
stabil_status stabil_is_stable(const stabil_graph* g, int* stable);

/* Solve with the chosen algorithm. oracle_max_n bounds the oracle's
 * exhaustive enumeration; pass 0 for the default (12). Precondition
 * failures (non-factor-critical input, singleton components, size bound)
 * come back as STABIL_ERR_PRECONDITION / STABIL_ERR_BOUND with a named
 * reason in *err. */
stabil_status stabil_solve(const stabil_graph* g, stabil_algo algo, int oracle_max_n,
                           stabil_solution** out, char** err);

/* The whole-Tutte-set variant with its approximation report: *k is the
 * smallest integer with #nontrivial-components >= (1+1/k)*|Y|, or 0 when
 * no such k exists (when k > 0 the cost is at most (k/2+1)*OPT). */
stabil_status stabil_solve_tutte_all(const stabil_graph* g, stabil_solution** out,
                                     long long* nontrivial_components, long long* tutte_size,
                                     int* k, char** err);

/* Certificates. */
stabil_status stabil_solution_parse(const char* text, stabil_solution** out, char** err);
stabil_status stabil_solution_to_text(const stabil_solution* s, char** out);
long long stabil_solution_cost2(const stabil_solution* s);
void stabil_solution_free(stabil_solution* s);

/* Check a certificate against a graph. *valid = 1 when every condition
 * holds; otherwise *report (if non-NULL) receives one violation per line. */
stabil_status stabil_verify(const stabil_graph* g, const stabil_solution* s, int* valid,
                            char** report);

/* Instance generators. Each returns the instance and (optionally) a JSON
 * metadata string describing the construction. */
stabil_status stabil_gen_mkec(const stabil_graph* base, int k, int q, stabil_graph** out,
                              char** meta_json, char** err);
/* sets_spec: semicolon-separated sets of comma-separated 1-based element
 * labels, e.g. "1,2;2,3;1,2,3". */
stabil_status stabil_gen_setcover(const char* sets_spec, int n_elems, int big_n,
                                  stabil_graph** out, char** meta_json, char** err);
/* ear_lengths: odd lengths, the first at least 3. */
stabil_status stabil_gen_factor_critical(const int* ear_lengths, int num_ears,
                                         unsigned long long seed, stabil_graph** out,
                                         char** meta_json, char** err);
stabil_status stabil_gen_random(int n, long long p_num, long long p_den,
                                unsigned long long seed, stabil_graph** out, char** meta_json,
                                char** err);

#ifdef __cplusplus
}
#endif

#endif /* STABILKIT_H */
