// Copyright 2026 The harmdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * harmdist: the harmonic edit distance between strings.
 *
 * d(A, B) = 2 H(|A| + |B| - |lcs(A, B)|) - H(|A|) - H(|B|), with H(n) the
 * n-th harmonic number. It is a metric: symmetric, zero only on equal
 * strings, and it satisfies the triangle inequality.
 *
 * Every function returns a harmdist_status; on failure a message for the
 * calling thread is available from harmdist_last_error(). Objects are opaque
 * handles released with the matching *_destroy function. Contexts, corpora
 * and indexes are immutable after creation and may be shared across
 * threads.
 */
#ifndef HARMDIST_HARMDIST_H_
#define HARMDIST_HARMDIST_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HARMDIST_BUILDING_LIBRARY)
#    define HARMDIST_API __declspec(dllexport)
#  else
#    define HARMDIST_API __declspec(dllimport)
#  endif
#else
#  define HARMDIST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum harmdist_status {
  HARMDIST_OK = 0,
  HARMDIST_ERR_INVALID_ARGUMENT = 1,
  HARMDIST_ERR_PRECONDITION = 2,
  HARMDIST_ERR_CAPACITY = 3,
  HARMDIST_ERR_ENCODING = 4,
  HARMDIST_ERR_IO = 5,
  HARMDIST_ERR_FORMAT = 6,
  HARMDIST_ERR_BUFFER_TOO_SMALL = 7,
  HARMDIST_ERR_INTERNAL = 8
} harmdist_status;

typedef enum harmdist_mode {
  HARMDIST_MODE_BYTES = 0,
  HARMDIST_MODE_CODEPOINTS = 1,
  HARMDIST_MODE_WORDS = 2
} harmdist_mode;

typedef enum harmdist_engine {
  HARMDIST_ENGINE_AUTO = 0,
  HARMDIST_ENGINE_DP = 1,
  HARMDIST_ENGINE_BITPARALLEL = 2,
  HARMDIST_ENGINE_HUNT_SZYMANSKI = 3,
  HARMDIST_ENGINE_BRUTEFORCE = 4
} harmdist_engine;

typedef struct harmdist_context harmdist_context;
typedef struct harmdist_corpus harmdist_corpus;
typedef struct harmdist_index harmdist_index;
typedef struct harmdist_report harmdist_report;

typedef struct harmdist_breakdown {
  double insertion_cost;
  double deletion_cost;
  double total;
} harmdist_breakdown;

typedef struct harmdist_neighbor {
  size_t index;
  double distance;
} harmdist_neighbor;

HARMDIST_API const char* harmdist_version(void);
HARMDIST_API const char* harmdist_status_string(harmdist_status status);
/* Message describing the last failure on this thread; never NULL. */
HARMDIST_API const char* harmdist_last_error(void);

/* table_capacity 0 selects the process default (HARMDIST_TABLE_SIZE or 2^20). */
HARMDIST_API harmdist_status harmdist_context_create(harmdist_mode mode, harmdist_engine engine,
                                                     size_t table_capacity,
                                                     harmdist_context** out);
HARMDIST_API void harmdist_context_destroy(harmdist_context* ctx);

HARMDIST_API harmdist_status harmdist_distance(const harmdist_context* ctx, const char* a,
                                               size_t a_len, const char* b, size_t b_len,
                                               double* out);
HARMDIST_API harmdist_status harmdist_distance_decomposed(const harmdist_context* ctx,
                                                          const char* a, size_t a_len,
                                                          const char* b, size_t b_len,
                                                          harmdist_breakdown* out);
/* Exact value as "numerator/denominator" in lowest terms. *needed receives
 * the buffer size required including the terminating NUL. */
HARMDIST_API harmdist_status harmdist_distance_exact(const harmdist_context* ctx, const char* a,
                                                     size_t a_len, const char* b, size_t b_len,
                                                     char* buf, size_t buf_size, size_t* needed);
HARMDIST_API harmdist_status harmdist_lcs_length(const harmdist_context* ctx, const char* a,
                                                 size_t a_len, const char* b, size_t b_len,
                                                 size_t* out);
/* Token count of text under the context's mode. */
HARMDIST_API harmdist_status harmdist_token_count(const harmdist_context* ctx, const char* text,
                                                  size_t len, size_t* out);

/* Fixed-point rendering with `precision` decimals (1..17). */
HARMDIST_API harmdist_status harmdist_format_distance(double value, int precision, char* buf,
                                                      size_t buf_size, size_t* needed);

/* Corpus: strings tokenized and interned with the context's mode. */
HARMDIST_API harmdist_status harmdist_corpus_create(const harmdist_context* ctx,
                                                    const char* const* items,
                                                    const size_t* lengths, size_t count,
                                                    harmdist_corpus** out);
/* Newline-delimited file; a trailing newline is optional, empty lines are
 * empty strings. */
HARMDIST_API harmdist_status harmdist_corpus_load(const harmdist_context* ctx, const char* path,
                                                  harmdist_corpus** out);
HARMDIST_API void harmdist_corpus_destroy(harmdist_corpus* corpus);
HARMDIST_API size_t harmdist_corpus_size(const harmdist_corpus* corpus);
/* Raw text of item i; valid while the corpus lives. */
HARMDIST_API harmdist_status harmdist_corpus_item(const harmdist_corpus* corpus, size_t i,
                                                  const char** data, size_t* len);

/* Row-major n*n distance matrix into out (n*n doubles). workers 0 picks the
 * hardware concurrency; the result does not depend on it. */
HARMDIST_API harmdist_status harmdist_matrix(const harmdist_corpus* corpus, unsigned workers,
                                             double* out);

/* Linear-scan k nearest neighbours; out holds min(k, n) entries. */
HARMDIST_API harmdist_status harmdist_scan_knn(const harmdist_corpus* corpus, const char* query,
                                               size_t query_len, size_t k,
                                               harmdist_neighbor* out, size_t* out_count);

HARMDIST_API harmdist_status harmdist_index_build(const harmdist_corpus* corpus, uint64_t seed,
                                                  harmdist_index** out);
HARMDIST_API harmdist_status harmdist_index_load(const harmdist_corpus* corpus, const char* path,
                                                 harmdist_index** out);
HARMDIST_API harmdist_status harmdist_index_save(const harmdist_index* index, const char* path);
HARMDIST_API void harmdist_index_destroy(harmdist_index* index);
/* out must hold min(k, corpus size) entries. evaluations may be NULL. */
HARMDIST_API harmdist_status harmdist_index_knn(const harmdist_index* index, const char* query,
                                                size_t query_len, size_t k,
                                                harmdist_neighbor* out, size_t* out_count,
                                                size_t* evaluations);
/* out must hold corpus-size entries; results ascend by index. */
HARMDIST_API harmdist_status harmdist_index_range(const harmdist_index* index, const char* query,
                                                  size_t query_len, double radius,
                                                  harmdist_neighbor* out, size_t* out_count,
                                                  size_t* evaluations);

typedef struct harmdist_check_options {
  int exhaustive;         /* nonzero: enumerate the universe; zero: random samples */
  int rational;           /* nonzero: exact rationals; zero: floating point */
  unsigned alphabet;
  unsigned max_length;
  uint64_t samples;       /* random mode */
  uint64_t seed;
  int correlated;         /* random mode: mutate a shared ancestor */
  int fixture_broken_lcs; /* test fixture: replace LCS by the shorter length */
  unsigned workers;       /* 0 picks the hardware concurrency */
  harmdist_engine engine;
} harmdist_check_options;

HARMDIST_API void harmdist_check_options_init(harmdist_check_options* options);
/* Runs the metric axioms and the three lemma suites. Counterexamples in the
 * report are already shrunk. */
HARMDIST_API harmdist_status harmdist_check_run(const harmdist_check_options* options,
                                                harmdist_report** out);
HARMDIST_API void harmdist_report_destroy(harmdist_report* report);
HARMDIST_API int harmdist_report_passed(const harmdist_report* report);
HARMDIST_API uint64_t harmdist_report_violations(const harmdist_report* report);
/* Line-oriented text and JSON renderings; valid while the report lives. */
HARMDIST_API const char* harmdist_report_text(const harmdist_report* report);
HARMDIST_API const char* harmdist_report_json(const harmdist_report* report);

#ifdef __cplusplus
}
#endif

#endif  /* HARMDIST_HARMDIST_H_ */
