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


/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "mvfold/mvfold.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int expect_text(char* got, const char* want) {
  int ok = got != NULL && strcmp(got, want) == 0;
  if (!ok) fprintf(stderr, "got '%s', want '%s'\n", got ? got : "(null)", want);
  mvfold_string_free(got);
  return ok;
}

static int count_visits(const size_t* faces, size_t n, void* user) {
  (void)faces;
  (void)n;
  ++*(int*)user;
  return 0;
}

static int stop_after_one(const size_t* faces, size_t n, void* user) {
  memcpy(user, faces, n * sizeof(size_t));
  return 1;
}

int main(void) {
  mvfold_assignment* mu = NULL;
  mvfold_assignment* other = NULL;
  char* text = NULL;
  char* lower = NULL;
  char* upper = NULL;
  size_t n = 0;
  int flag = -1;

  EXPECT(mvfold_version()[0] != '\0');
  EXPECT(strcmp(mvfold_status_name(MVFOLD_ERR_PARSE), "parse error") == 0);

  EXPECT(mvfold_assignment_parse("M2V2", &mu) == MVFOLD_OK);
  EXPECT(mvfold_assignment_faces(mu, &n) == MVFOLD_OK && n == 5);
  EXPECT(mvfold_assignment_format(mu, MVFOLD_FORM_RAW, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "MMVV"));
  EXPECT(mvfold_assignment_format(mu, MVFOLD_FORM_BLOCKS, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "M2V2"));

  EXPECT(mvfold_count_fast(mu, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "4"));
  EXPECT(mvfold_count_oracle(mu, 0, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "4"));
  EXPECT(mvfold_bounds(mu, &lower, &upper) == MVFOLD_OK);
  EXPECT(expect_text(lower, "4"));
  EXPECT(expect_text(upper, "12"));

  {
    int visits = 0;
    EXPECT(mvfold_enumerate(mu, count_visits, &visits, &text) == MVFOLD_OK);
    EXPECT(visits == 4);
    EXPECT(expect_text(text, "4"));
  }
  {
    size_t first[5] = {0};
    const size_t want[5] = {4, 1, 2, 3, 0};
    EXPECT(mvfold_enumerate(mu, stop_after_one, first, NULL) == MVFOLD_OK);
    EXPECT(memcmp(first, want, sizeof want) == 0);
    EXPECT(mvfold_is_valid(mu, first, 5, &flag) == MVFOLD_OK && flag == 1);
    EXPECT(mvfold_verify_lemma_structure(mu, first, 5, &flag) == MVFOLD_OK && flag == 1);
    EXPECT(mvfold_render(mu, first, 5, MVFOLD_RENDER_ASCII, &text) == MVFOLD_OK);
    EXPECT(text != NULL && strstr(text, "4  1  2  3  0") != NULL);
    mvfold_string_free(text);
  }
  {
    const size_t bad[5] = {0, 1, 2, 3, 4};
    const size_t dup[5] = {0, 0, 2, 3, 4};
    EXPECT(mvfold_is_valid(mu, bad, 5, &flag) == MVFOLD_OK && flag == 0);
    EXPECT(mvfold_is_valid(mu, dup, 5, &flag) == MVFOLD_ERR_INVALID_ORDERING);
    EXPECT(mvfold_render(mu, bad, 5, MVFOLD_RENDER_SVG, &text) == MVFOLD_ERR_INVALID_ORDERING);
    EXPECT(mvfold_last_error()[0] != '\0');
  }

  EXPECT(mvfold_assignment_transform(mu, MVFOLD_REVERSE, &other) == MVFOLD_OK);
  EXPECT(mvfold_assignment_format(other, MVFOLD_FORM_RAW, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "VVMM"));
  mvfold_assignment_free(other);
  {
    int first_valley = -1;
    size_t sizes[4] = {0};
    size_t count = 0;
    EXPECT(mvfold_assignment_blocks(mu, &first_valley, sizes, 4, &count) == MVFOLD_OK);
    EXPECT(first_valley == 0 && count == 2 && sizes[0] == 2 && sizes[1] == 2);
  }
  mvfold_assignment_free(mu);

  {
    const size_t sizes[3] = {1, 2, 3};
    EXPECT(mvfold_assignment_from_blocks(1, sizes, 3, &mu) == MVFOLD_OK);
    EXPECT(mvfold_assignment_format(mu, MVFOLD_FORM_RAW, &text) == MVFOLD_OK);
    EXPECT(expect_text(text, "VMMVVV"));
    mvfold_assignment_free(mu);
  }

  EXPECT(mvfold_assignment_parse("MXV", &mu) == MVFOLD_ERR_PARSE);
  EXPECT(mvfold_assignment_parse(NULL, &mu) == MVFOLD_ERR_NULL_ARGUMENT);
  EXPECT(mvfold_two_block(0, 0, &text) == MVFOLD_ERR_DOMAIN);
  EXPECT(mvfold_total_foldings(30, NULL, &text) == MVFOLD_ERR_LIMIT);

  EXPECT(mvfold_catalan(6, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "132"));
  EXPECT(mvfold_triangle_row(3, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "1 3 5 5"));
  EXPECT(mvfold_two_alternating(9, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "5544"));
  EXPECT(mvfold_walk_count_dp(6, &text) == MVFOLD_OK);
  EXPECT(expect_text(text, "196"));

  {
    mvfold_matrix* x = NULL;
    size_t rows = 0;
    size_t cols = 0;
    EXPECT(mvfold_walk_matrix(4, &x) == MVFOLD_OK);
    EXPECT(mvfold_matrix_shape(x, &rows, &cols) == MVFOLD_OK && rows == 3 && cols == 3);
    EXPECT(mvfold_matrix_entry(x, 2, 2, &text) == MVFOLD_OK);
    EXPECT(expect_text(text, "1"));
    EXPECT(mvfold_matrix_format(x, &text) == MVFOLD_OK);
    EXPECT(expect_text(text, "4 4 2\n4 4 2\n2 2 1\n"));
    EXPECT(mvfold_matrix_sum(x, &text) == MVFOLD_OK);
    EXPECT(expect_text(text, "25"));
    EXPECT(mvfold_matrix_entry(x, 3, 0, &text) == MVFOLD_ERR_DOMAIN);
    mvfold_matrix_free(x);
  }

  {
    mvfold_sweep_options opts = {0, 2, 1};
    mvfold_records* recs = NULL;
    mvfold_records* back = NULL;
    size_t size = 0;
    size_t faces = 0;
    char* assignment = NULL;
    EXPECT(mvfold_total_foldings(8, &opts, &text) == MVFOLD_OK);
    EXPECT(expect_text(text, "1392"));
    EXPECT(mvfold_max_search(5, 0, &opts, &recs) == MVFOLD_OK);
    EXPECT(mvfold_records_size(recs, &size) == MVFOLD_OK && size == 3);
    EXPECT(mvfold_records_get(recs, 0, &faces, &assignment, &text) == MVFOLD_OK);
    EXPECT(faces == 5);
    EXPECT(expect_text(assignment, "MMMM"));
    EXPECT(expect_text(text, "4"));
    EXPECT(mvfold_records_to_jsonl(recs, &text) == MVFOLD_OK);
    EXPECT(mvfold_records_parse_jsonl(text, &back) == MVFOLD_OK);
    mvfold_string_free(text);
    EXPECT(mvfold_records_size(back, &size) == MVFOLD_OK && size == 3);
    EXPECT(mvfold_records_scatter(back, &text) == MVFOLD_OK);
    EXPECT(expect_text(text, "5 4\n"));
    {
      mvfold_records* broken = NULL;
      EXPECT(mvfold_records_parse_jsonl("{\"n\":1}", &broken) == MVFOLD_ERR_PARSE);
      EXPECT(broken == NULL);
    }
    mvfold_records_free(back);
    mvfold_records_free(recs);
  }

  {
    mvfold_series* series = NULL;
    size_t size = 0;
    size_t k = 0;
    double ratio = 0.0;
    char* err = NULL;
    EXPECT(mvfold_equal_blocks_series(2, 2, 0, &series) == MVFOLD_OK);
    EXPECT(mvfold_series_size(series, &size) == MVFOLD_OK && size == 2);
    EXPECT(mvfold_series_row(series, 1, &k, &text, &ratio, &err) == MVFOLD_OK);
    EXPECT(k == 2 && err == NULL && ratio > 0.0);
    EXPECT(expect_text(text, "4"));
    mvfold_series_free(series);
  }

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("c api: all checks passed\n");
  return failures ? 1 : 0;
}
