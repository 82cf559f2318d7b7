/*
 * unref — unrefinable integer partitions, numerical sets and Young diagrams.
 *
 * C interface of the shared library. All functions return an unref_status;
 * results are written through out-parameters. Objects are opaque handles
 * owned by the caller and released with the matching _free function. Strings
 * returned through char** are heap-allocated and released with
 * unref_string_free.
 *
 * On any error the thread-local message from unref_last_error_message()
 * carries the details.
 */
#ifndef UNREF_H
#define UNREF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unref_status {
  UNREF_OK = 0,
  UNREF_ERR_EMPTY = 1,
  UNREF_ERR_NONPOSITIVE_PART = 2,
  UNREF_ERR_DUPLICATE_PART = 3,
  UNREF_ERR_NO_GAPS = 4,
  UNREF_ERR_NO_Z_COLUMN = 5,
  UNREF_ERR_OUT_OF_RANGE = 6,
  UNREF_ERR_EMPTY_UNIVERSE = 7,
  UNREF_ERR_PATTERN_COLLISION = 8,
  UNREF_ERR_EXCLUDED_ETA = 9,
  UNREF_ERR_CONSTRAINT_VIOLATION = 10,
  UNREF_ERR_SHAPE_MISMATCH = 11,
  UNREF_ERR_UNCLASSIFIABLE = 12,
  UNREF_ERR_UNKNOWN_SUITE = 13,
  UNREF_ERR_MALFORMED_LINE = 14,
  UNREF_ERR_IO = 15,
  UNREF_ERR_INVALID_ARGUMENT = 16,
  UNREF_ERR_VERIFICATION = 17, /* a verification suite found failures */
  UNREF_ERR_INTERNAL = 18
} unref_status;

const char* unref_status_name(unref_status status);
const char* unref_last_error_message(void);
void unref_string_free(char* s);
const char* unref_version(void);

/* ---------------------------------------------------------------- handles */

typedef struct unref_partition unref_partition;
typedef struct unref_numset unref_numset;
typedef struct unref_diagram unref_diagram;

/* ------------------------------------------------------------- partitions */

unref_status unref_partition_create(const int64_t* values, size_t count,
                                    unref_partition** out);
void unref_partition_free(unref_partition* p);

size_t unref_partition_size(const unref_partition* p);
int64_t unref_partition_part(const unref_partition* p, size_t index); /* ascending */
int64_t unref_partition_weight(const unref_partition* p);
int64_t unref_partition_largest(const unref_partition* p);
int unref_partition_is_proper(const unref_partition* p);

/* Missing parts {1..largest} \ parts; writes up to capacity entries and the
 * true count. */
unref_status unref_partition_missing(const unref_partition* p, int64_t* buffer,
                                     size_t capacity, size_t* count);

/* {"parts":[...],"weight":..,"n":..,"d":..} */
unref_status unref_partition_to_json(const unref_partition* p, char** json);

/* N = T_n - d with 0 <= d <= n-1. */
unref_status unref_triangular_decompose(int64_t weight, int64_t* n, int64_t* d);

/* -------------------------------------------------------------- streaming */

typedef struct unref_enum_options {
  int64_t weight;
  int min_parts;        /* at least 1 */
  int64_t max_part;     /* 0 = unbounded */
  int parity;           /* 0 any, 1 odd-only, 2 even-only */
  int unrefinable_only; /* keep unrefinable partitions only (implies min_parts >= 2) */
  int maximal_only;     /* keep those attaining the maximal largest part */
  int max_missing_only; /* keep those attaining the missing-parts bound */
  int jobs;             /* 0 = UNREF_JOBS or hardware */
} unref_enum_options;

/* Return nonzero from the callback to stop early. */
typedef int (*unref_partition_visit)(void* user, const unref_partition* p);
unref_status unref_enumerate(const unref_enum_options* options,
                             unref_partition_visit visit, void* user);

/* Formatted enumeration; format is "json" (one object per line), "csv"
 * (header "parts;weight;n;d;lambda_t;missing_count;unrefinable;maximal") or
 * "text". The callback receives one line at a time, without newline. */
typedef int (*unref_line_visit)(void* user, const char* line);
unref_status unref_enumerate_lines(const unref_enum_options* options, const char* format,
                                   unref_line_visit visit, void* user);

/* --------------------------------------------------------- numerical sets */

unref_status unref_numset_from_partition(const unref_partition* p, unref_numset** out);
unref_status unref_numset_parse(const char* text, unref_numset** out); /* "0,3,4,7,9,->" */
void unref_numset_free(unref_numset* s);

unref_status unref_numset_format(const unref_numset* s, char** text);
int64_t unref_numset_frobenius(const unref_numset* s);
int64_t unref_numset_genus(const unref_numset* s);
int64_t unref_numset_multiplicity(const unref_numset* s);
unref_status unref_numset_gaps(const unref_numset* s, int64_t* buffer, size_t capacity,
                               size_t* count);
unref_status unref_numset_small_elements(const unref_numset* s, int64_t bound,
                                         int64_t* buffer, size_t capacity, size_t* count);

/* closed != 0 when S is a numerical semigroup; otherwise witness_a + witness_b
 * is a gap. */
unref_status unref_numset_is_semigroup(const unref_numset* s, int* closed,
                                       int64_t* witness_a, int64_t* witness_b);

/* --------------------------------------------------------- Young diagrams */

unref_status unref_diagram_create(const int64_t* rows, size_t count, unref_diagram** out);
unref_status unref_kn_transform(const unref_numset* s, unref_diagram** out);
unref_status unref_kn_inverse(const unref_diagram* y, unref_numset** out);
void unref_diagram_free(unref_diagram* y);

size_t unref_diagram_row_count(const unref_diagram* y);
int64_t unref_diagram_row(const unref_diagram* y, size_t index); /* top-down */
int64_t unref_diagram_cell_count(const unref_diagram* y);
int64_t unref_diagram_hook(const unref_diagram* y, int64_t i, int64_t j); /* 1-based; 0 outside */
unref_status unref_diagram_conjugate(const unref_diagram* y, unref_diagram** out);
int unref_diagram_is_self_conjugate(const unref_diagram* y);

/* mode: 0 cells, 1 hooks; format: "ascii" or "svg". */
unref_status unref_diagram_render(const unref_diagram* y, int hooks_mode,
                                  const char* format, char** text);

/* ---------------------------------------------------------------- criteria */

/* method: "def", "geo" or "both". JSON carries the verdict, the definitional
 * witness and the offending hooks. */
unref_status unref_check(const unref_partition* p, const char* method, char** json);
int unref_is_unrefinable(const unref_partition* p);

/* ----------------------------------------------------------------- bounds */

unref_status unref_lambda_t_bound(int64_t n, int64_t d, int64_t* bound, char** regime);

/* kind: "pi", "sigma", "tau" (k ignored) or "zeta" (k required, pass k > 0). */
unref_status unref_exceptional(const char* kind, int64_t n, int64_t k,
                               unref_partition** out);

/* -------------------------------------------------------------- bijections */

/* case_name: "triangular", "nt5" or "nt4". */
unref_status unref_bijection_forward(const unref_partition* lambda, char** json);
unref_status unref_bijection_backward(const int64_t* eta, size_t eta_count,
                                      const char* case_name, int64_t n,
                                      unref_partition** out);
/* as_text != 0 selects the human-readable report instead of JSON. Returns
 * UNREF_ERR_VERIFICATION (report still filled in) when a check fails. */
unref_status unref_bijection_verify(const char* case_name, int64_t n, int64_t k,
                                    int jobs, int as_text, char** report);
unref_status unref_bijection_exclusion(const char* case_name, int64_t n, int64_t k,
                                       char** json);

/* ------------------------------------------------------------------ suites */

typedef struct unref_suite_params {
  int64_t max_weight; /* 0 = suite default */
  int64_t min_n;      /* 0 = default 6 */
  int64_t max_n;      /* 0 = default 15 */
  int mode;           /* 0 auto, 1 naive, 2 optimized */
  int jobs;           /* 0 = UNREF_JOBS or hardware */
} unref_suite_params;

/* name: counts | equivalence | roundtrips | structure | exceptions.
 * Returns UNREF_ERR_VERIFICATION (with the JSON still filled in) when the
 * suite found failures. text != NULL selects the human-readable report
 * instead of JSON. */
unref_status unref_run_suite(const char* name, const unref_suite_params* params,
                             int as_text, char** report);

unref_status unref_oeis_check(const char* bfile_path, int64_t max_index, int jobs,
                              int as_text, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UNREF_H */
