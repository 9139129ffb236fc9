#ifndef NSGRAPH_H
#define NSGRAPH_H

/* C interface to the semigroup ideal-graph library.
 *
 * Conventions: every fallible call returns nsg_status; NSG_OK is 0. On
 * failure, nsg_last_error() returns a thread-local message describing the
 * offending value. Array getters use a caller buffer plus capacity and
 * report the required count through *written, so a first call with cap 0
 * sizes the buffer. Strings produced by render calls are heap-allocated
 * and must be released with nsg_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nsg_status {
  NSG_OK = 0,
  NSG_INVALID_ARGUMENT = 1,
  NSG_EMPTY_GENERATOR_LIST = 2,
  NSG_NON_COPRIME_GENERATORS = 3,
  NSG_NOT_A_MEMBER = 4,
  NSG_ZERO_FACTORIZATION = 5,
  NSG_ORDER_TOO_LARGE = 6,
  NSG_ORDER_MISMATCH = 7,
  NSG_MISSING_TYPE = 8,
  NSG_IO_ERROR = 9,
  NSG_UNKNOWN_ERROR = 10
} nsg_status;

typedef enum nsg_format {
  NSG_RENDER_TEXT = 0,
  NSG_RENDER_JSON = 1,
  NSG_RENDER_DOT = 2
} nsg_format;

typedef struct nsg_semigroup nsg_semigroup;
typedef struct nsg_graph nsg_graph;
typedef struct nsg_ideal nsg_ideal;
typedef struct nsg_report nsg_report;
typedef struct nsg_verification nsg_verification;

const char* nsg_status_name(nsg_status status);
const char* nsg_last_error(void);
void nsg_string_free(char* s);

/* --- numerical semigroups --- */

nsg_status nsg_semigroup_create(const int64_t* generators, size_t count,
                                nsg_semigroup** out);
void nsg_semigroup_destroy(nsg_semigroup* s);
int64_t nsg_semigroup_frobenius(const nsg_semigroup* s);
int64_t nsg_semigroup_multiplicity(const nsg_semigroup* s);
int nsg_semigroup_contains(const nsg_semigroup* s, int64_t t);
nsg_status nsg_semigroup_generators(const nsg_semigroup* s, int64_t* buf,
                                    size_t cap, size_t* written);
nsg_status nsg_semigroup_gaps(const nsg_semigroup* s, int64_t* buf,
                              size_t cap, size_t* written);
nsg_status nsg_semigroup_apery_set(const nsg_semigroup* s, int64_t m,
                                   int64_t* buf, size_t cap, size_t* written);
/* NSG_RENDER_TEXT or NSG_RENDER_JSON */
nsg_status nsg_semigroup_render(const nsg_semigroup* s, nsg_format format,
                                char** out);

/* Sorted divisor set B(x) = { y : y and x - y are members }, 0 included. */
nsg_status nsg_divisors(const nsg_semigroup* s, int64_t x, int64_t* buf,
                        size_t cap, size_t* written);

/* --- ideal graphs --- */

/* Graph on the nonzero divisors of x; edge y ~ z when x - (y + z) is not
 * a member. */
nsg_status nsg_graph_build(const nsg_semigroup* s, int64_t x,
                           nsg_graph** out);
void nsg_graph_destroy(nsg_graph* g);
int nsg_graph_order(const nsg_graph* g);
size_t nsg_graph_edge_count(const nsg_graph* g);
int64_t nsg_graph_vertex_label(const nsg_graph* g, int i);
int nsg_graph_adjacent(const nsg_graph* g, int i, int j);
/* NSG_RENDER_TEXT, NSG_RENDER_JSON or NSG_RENDER_DOT */
nsg_status nsg_graph_render(const nsg_graph* g, nsg_format format,
                            char** out);

/* --- explicitly generated ideals --- */

nsg_status nsg_ideal_create(const nsg_semigroup* s, const int64_t* generators,
                            size_t count, nsg_ideal** out);
void nsg_ideal_destroy(nsg_ideal* ideal);
nsg_status nsg_ideal_complement(const nsg_ideal* ideal, int64_t* buf,
                                size_t cap, size_t* written);
int nsg_ideal_contains(const nsg_ideal* ideal, int64_t t);
/* Returns 1 and stores the defining x when the ideal is irreducible
 * (complement equal to some B(x)), else returns 0. */
int nsg_ideal_is_irreducible(const nsg_ideal* ideal, int64_t* x_out);
nsg_status nsg_ideal_graph(const nsg_ideal* ideal, nsg_graph** out);

/* --- classification --- */

nsg_status nsg_classify(const nsg_semigroup* s, int64_t x, nsg_report** out);
void nsg_report_destroy(nsg_report* r);
int nsg_report_order(const nsg_report* r);
/* 0 when no admissible form matched (only meaningful at orders 6 and 7). */
int nsg_report_case_index(const nsg_report* r);
/* 0 when the graph matches no table row up to isomorphism. */
int nsg_report_type_index(const nsg_report* r);
/* "planar", "nonplanar" or "out-of-range". */
const char* nsg_report_planar_theorem(const nsg_report* r);
/* 1 planar, 0 nonplanar, -1 when no oracle verdict was computed. */
int nsg_report_planar_oracle(const nsg_report* r);
int nsg_report_agreement(const nsg_report* r);
/* NSG_RENDER_TEXT or NSG_RENDER_JSON */
nsg_status nsg_report_render(const nsg_report* r, nsg_format format,
                             char** out);

/* --- exhaustive verification --- */

/* Sweeps every semigroup with minimal system size in [2, max_dim] and
 * generators <= max_gen, and every member x in [1, max_x]. jobs <= 0
 * means one worker per hardware thread; csv_path may be NULL. */
nsg_status nsg_verify(int max_dim, int max_gen, int64_t max_x, int jobs,
                      const char* csv_path, nsg_verification** out);
void nsg_verification_destroy(nsg_verification* v);
uint64_t nsg_verification_instances(const nsg_verification* v);
uint64_t nsg_verification_violations(const nsg_verification* v);
/* NSG_RENDER_TEXT or NSG_RENDER_JSON */
nsg_status nsg_verification_render(const nsg_verification* v,
                                   nsg_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NSGRAPH_H */
