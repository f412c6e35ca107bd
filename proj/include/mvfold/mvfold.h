/*
 * Copyright 2026 The mvfold Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * mvfold: exact counting of flat foldings of a 1 x n strip of stamps under a
 * fixed mountain-valley assignment.
 *
 * Conventions:
 *   - every function returns an mvfold_status; on failure a description is
 *     available from mvfold_last_error() on the calling thread;
 *   - counts cross the API as decimal strings (they may exceed 64 bits);
 *   - every char* handed out by the library is released with
 *     mvfold_string_free, every handle with its own _free function;
 *   - a layer ordering is an array of face labels listed left to right.
 */

#ifndef MVFOLD_MVFOLD_H
#define MVFOLD_MVFOLD_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MVFOLD_BUILDING)
#    define MVFOLD_API __declspec(dllexport)
#  else
#    define MVFOLD_API __declspec(dllimport)
#  endif
#else
#  define MVFOLD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mvfold_status {
  MVFOLD_OK = 0,
  MVFOLD_ERR_NULL_ARGUMENT = 1,
  MVFOLD_ERR_PARSE = 2,
  MVFOLD_ERR_DOMAIN = 3,
  MVFOLD_ERR_INVALID_ORDERING = 4,
  MVFOLD_ERR_LIMIT = 5,
  MVFOLD_ERR_OVERFLOW = 6,
  MVFOLD_ERR_INTERNAL = 7
} mvfold_status;

MVFOLD_API const char* mvfold_version(void);
MVFOLD_API const char* mvfold_status_name(mvfold_status status);
/* Message of the last failed call on this thread; "" if none. */
MVFOLD_API const char* mvfold_last_error(void);
MVFOLD_API void mvfold_string_free(char* text);

/* ---- assignments ------------------------------------------------------ */

typedef struct mvfold_assignment mvfold_assignment;

typedef enum mvfold_text_form { MVFOLD_FORM_RAW = 0, MVFOLD_FORM_BLOCKS = 1 } mvfold_text_form;

typedef enum mvfold_symmetry {
  MVFOLD_REVERSE = 0,
  MVFOLD_COMPLEMENT = 1,
  MVFOLD_CANONICAL = 2
} mvfold_symmetry;

/* Raw ("MMVV") or block ("M2V2") text; "" is the one-face strip. */
MVFOLD_API mvfold_status mvfold_assignment_parse(const char* text, mvfold_assignment** out);
/* Blocks alternate direction starting with M (first_valley = 0) or V. */
MVFOLD_API mvfold_status mvfold_assignment_from_blocks(int first_valley, const size_t* sizes, size_t count,
                                                       mvfold_assignment** out);
MVFOLD_API mvfold_status mvfold_assignment_two_alternating(size_t blocks, mvfold_assignment** out);
MVFOLD_API void mvfold_assignment_free(mvfold_assignment* mu);

MVFOLD_API mvfold_status mvfold_assignment_faces(const mvfold_assignment* mu, size_t* out);
MVFOLD_API mvfold_status mvfold_assignment_format(const mvfold_assignment* mu, mvfold_text_form form, char** out);
MVFOLD_API mvfold_status mvfold_assignment_transform(const mvfold_assignment* mu, mvfold_symmetry op,
                                                     mvfold_assignment** out);
/* Writes up to `capacity` block sizes; *count receives the block count. */
MVFOLD_API mvfold_status mvfold_assignment_blocks(const mvfold_assignment* mu, int* first_valley, size_t* sizes,
                                                  size_t capacity, size_t* count);

/* ---- validity and counting -------------------------------------------- */

MVFOLD_API mvfold_status mvfold_is_valid(const mvfold_assignment* mu, const size_t* faces, size_t n, int* out);
/* Brute force over all permutations; face_limit 0 means the default (10). */
MVFOLD_API mvfold_status mvfold_count_oracle(const mvfold_assignment* mu, size_t face_limit, char** out);
MVFOLD_API mvfold_status mvfold_count_fast(const mvfold_assignment* mu, char** out);

/* Return 0 to continue, nonzero to stop. `faces` is valid for the call only. */
typedef int (*mvfold_folding_visitor)(const size_t* faces, size_t n, void* user);

/* Visits every valid folding in deterministic order. *visited (optional)
 * receives the number of foldings delivered. */
MVFOLD_API mvfold_status mvfold_enumerate(const mvfold_assignment* mu, mvfold_folding_visitor visitor, void* user,
                                          char** visited);
MVFOLD_API mvfold_status mvfold_verify_lemma_structure(const mvfold_assignment* mu, const size_t* faces, size_t n,
                                                       int* out);

/* ---- closed forms ----------------------------------------------------- */

MVFOLD_API mvfold_status mvfold_catalan(size_t k, char** out);
/* Space-separated entries of row r of Catalan's triangle. */
MVFOLD_API mvfold_status mvfold_triangle_row(size_t r, char** out);
MVFOLD_API mvfold_status mvfold_uniform(size_t creases, char** out);
MVFOLD_API mvfold_status mvfold_two_block(size_t a, size_t b, char** out);
MVFOLD_API mvfold_status mvfold_two_alternating(size_t blocks, char** out);
MVFOLD_API mvfold_status mvfold_walk_count_dp(size_t m, char** out);
MVFOLD_API mvfold_status mvfold_bounds(const mvfold_assignment* mu, char** lower, char** upper);

typedef struct mvfold_matrix mvfold_matrix;

MVFOLD_API mvfold_status mvfold_walk_matrix(size_t m, mvfold_matrix** out);
MVFOLD_API mvfold_status mvfold_step_matrix(size_t m, mvfold_matrix** out);
MVFOLD_API void mvfold_matrix_free(mvfold_matrix* matrix);
MVFOLD_API mvfold_status mvfold_matrix_shape(const mvfold_matrix* matrix, size_t* rows, size_t* cols);
/* 0-based stored indices. */
MVFOLD_API mvfold_status mvfold_matrix_entry(const mvfold_matrix* matrix, size_t row, size_t col, char** out);
MVFOLD_API mvfold_status mvfold_matrix_sum(const mvfold_matrix* matrix, char** out);
/* Row-major, entries space-separated, one row per line. */
MVFOLD_API mvfold_status mvfold_matrix_format(const mvfold_matrix* matrix, char** out);

/* ---- sweeps ----------------------------------------------------------- */

typedef struct mvfold_sweep_options {
  size_t limit;     /* largest face count; 0 means the default (16) */
  unsigned threads; /* 0 means hardware concurrency */
  int use_symmetry; /* nonzero: count orbit representatives only */
} mvfold_sweep_options;

/* NULL options select the defaults. */
MVFOLD_API mvfold_status mvfold_total_foldings(size_t faces, const mvfold_sweep_options* options, char** out);

typedef struct mvfold_records mvfold_records;

/* restricted != 0 limits the search to block sizes {1,2,3} without two
 * adjacent 3s. */
MVFOLD_API mvfold_status mvfold_max_search(size_t faces, int restricted, const mvfold_sweep_options* options,
                                           mvfold_records** out);
MVFOLD_API mvfold_status mvfold_records_create(mvfold_records** out);
MVFOLD_API mvfold_status mvfold_records_append(mvfold_records* records, const mvfold_records* more);
/* One JSON object per line: {"n":5,"assignment":"MMVV","count":"4"}. */
MVFOLD_API mvfold_status mvfold_records_parse_jsonl(const char* text, mvfold_records** out);
MVFOLD_API void mvfold_records_free(mvfold_records* records);
MVFOLD_API mvfold_status mvfold_records_size(const mvfold_records* records, size_t* out);
MVFOLD_API mvfold_status mvfold_records_get(const mvfold_records* records, size_t index, size_t* faces,
                                            char** assignment, char** count);
MVFOLD_API mvfold_status mvfold_records_to_jsonl(const mvfold_records* records, char** out);
/* "<n> <count>" lines. */
MVFOLD_API mvfold_status mvfold_records_scatter(const mvfold_records* records, char** out);
/* "<n> <2^n/n^(5/4)>" lines over the records' range of n. */
MVFOLD_API mvfold_status mvfold_records_curve(const mvfold_records* records, char** out);

typedef struct mvfold_series mvfold_series;

/* c(S(m,k)) for k = 1..k_max; reach_faces 0 means the default (33). */
MVFOLD_API mvfold_status mvfold_equal_blocks_series(size_t m, size_t k_max, size_t reach_faces,
                                                    mvfold_series** out);
MVFOLD_API void mvfold_series_free(mvfold_series* series);
MVFOLD_API mvfold_status mvfold_series_size(const mvfold_series* series, size_t* out);
/* For rows out of reach *count is NULL and *error holds the reason;
 * otherwise *error is NULL. Either pointer argument may be NULL. */
MVFOLD_API mvfold_status mvfold_series_row(const mvfold_series* series, size_t index, size_t* k, char** count,
                                           double* ratio, char** error);

/* ---- rendering -------------------------------------------------------- */

typedef enum mvfold_render_format { MVFOLD_RENDER_SVG = 0, MVFOLD_RENDER_ASCII = 1 } mvfold_render_format;

MVFOLD_API mvfold_status mvfold_render(const mvfold_assignment* mu, const size_t* faces, size_t n,
                                       mvfold_render_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MVFOLD_MVFOLD_H */
