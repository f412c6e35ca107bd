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

#include "mvfold/mvfold.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "mvfold/core.hpp"
#include "mvfold/enumerate.hpp"
#include "mvfold/error.hpp"
#include "mvfold/formulas.hpp"
#include "mvfold/render.hpp"
#include "mvfold/search.hpp"

struct mvfold_assignment {
  mvfold::MvAssignment value;
};

struct mvfold_matrix {
  mvfold::CountMatrix value;
};

struct mvfold_records {
  std::vector<mvfold::SearchRecord> value;
};

struct mvfold_series {
  std::vector<mvfold::SeriesRow> value;
};

namespace {

thread_local std::string last_error;

mvfold_status to_status(mvfold::ErrorCode code) {
  switch (code) {
    case mvfold::ErrorCode::Parse: return MVFOLD_ERR_PARSE;
    case mvfold::ErrorCode::Domain: return MVFOLD_ERR_DOMAIN;
    case mvfold::ErrorCode::InvalidOrdering: return MVFOLD_ERR_INVALID_ORDERING;
    case mvfold::ErrorCode::Limit: return MVFOLD_ERR_LIMIT;
    case mvfold::ErrorCode::Overflow: return MVFOLD_ERR_OVERFLOW;
  }
  return MVFOLD_ERR_INTERNAL;
}

mvfold_status fail(mvfold_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
mvfold_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return MVFOLD_OK;
  } catch (const mvfold::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MVFOLD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MVFOLD_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class... Ptrs>
bool any_null(Ptrs... ptrs) {
  return ((ptrs == nullptr) || ...);
}

mvfold_status null_argument() { return fail(MVFOLD_ERR_NULL_ARGUMENT, "required argument is NULL"); }

mvfold::LayerOrdering ordering_from(const size_t* faces, size_t n) {
  return mvfold::LayerOrdering(std::vector<std::size_t>(faces, faces + n));
}

mvfold::SweepOptions sweep_options(const mvfold_sweep_options* options) {
  mvfold::SweepOptions out;
  if (options) {
    if (options->limit != 0) out.limit = options->limit;
    out.threads = options->threads;
    out.use_symmetry = options->use_symmetry != 0;
  }
  return out;
}

}  // namespace

extern "C" {

const char* mvfold_version(void) { return "1.0.0"; }

const char* mvfold_status_name(mvfold_status status) {
  switch (status) {
    case MVFOLD_OK: return "ok";
    case MVFOLD_ERR_NULL_ARGUMENT: return "null argument";
    case MVFOLD_ERR_PARSE: return "parse error";
    case MVFOLD_ERR_DOMAIN: return "domain error";
    case MVFOLD_ERR_INVALID_ORDERING: return "invalid ordering";
    case MVFOLD_ERR_LIMIT: return "limit exceeded";
    case MVFOLD_ERR_OVERFLOW: return "overflow";
    case MVFOLD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mvfold_last_error(void) { return last_error.c_str(); }

void mvfold_string_free(char* text) { std::free(text); }

mvfold_status mvfold_assignment_parse(const char* text, mvfold_assignment** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { *out = new mvfold_assignment{mvfold::parse_assignment(text)}; });
}

mvfold_status mvfold_assignment_from_blocks(int first_valley, const size_t* sizes, size_t count,
                                            mvfold_assignment** out) {
  if (any_null(out) || (count != 0 && sizes == nullptr)) return null_argument();
  return guarded([&] {
    mvfold::BlockSpec spec{first_valley ? mvfold::CreaseDir::Valley : mvfold::CreaseDir::Mountain,
                           std::vector<std::size_t>(sizes, sizes + count)};
    *out = new mvfold_assignment{spec.expand()};
  });
}

mvfold_status mvfold_assignment_two_alternating(size_t blocks, mvfold_assignment** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = new mvfold_assignment{mvfold::two_alternating_assignment(blocks)}; });
}

void mvfold_assignment_free(mvfold_assignment* mu) { delete mu; }

mvfold_status mvfold_assignment_faces(const mvfold_assignment* mu, size_t* out) {
  if (any_null(mu, out)) return null_argument();
  return guarded([&] { *out = mu->value.faces(); });
}

mvfold_status mvfold_assignment_format(const mvfold_assignment* mu, mvfold_text_form form, char** out) {
  if (any_null(mu, out)) return null_argument();
  return guarded([&] { *out = dup(form == MVFOLD_FORM_BLOCKS ? mu->value.block_str() : mu->value.str()); });
}

mvfold_status mvfold_assignment_transform(const mvfold_assignment* mu, mvfold_symmetry op,
                                          mvfold_assignment** out) {
  if (any_null(mu, out)) return null_argument();
  return guarded([&] {
    switch (op) {
      case MVFOLD_REVERSE: *out = new mvfold_assignment{mvfold::reverse(mu->value)}; return;
      case MVFOLD_COMPLEMENT: *out = new mvfold_assignment{mvfold::complement(mu->value)}; return;
      case MVFOLD_CANONICAL: *out = new mvfold_assignment{mvfold::canonical(mu->value)}; return;
    }
    throw mvfold::Error(mvfold::ErrorCode::Domain, "unknown symmetry operation");
  });
}

mvfold_status mvfold_assignment_blocks(const mvfold_assignment* mu, int* first_valley, size_t* sizes,
                                       size_t capacity, size_t* count) {
  if (any_null(mu, count) || (capacity != 0 && sizes == nullptr)) return null_argument();
  return guarded([&] {
    mvfold::BlockSpec spec = mvfold::to_blocks(mu->value);
    if (first_valley) *first_valley = spec.first == mvfold::CreaseDir::Valley;
    for (std::size_t i = 0; i < spec.sizes.size() && i < capacity; ++i) sizes[i] = spec.sizes[i];
    *count = spec.sizes.size();
  });
}

mvfold_status mvfold_is_valid(const mvfold_assignment* mu, const size_t* faces, size_t n, int* out) {
  if (any_null(mu, faces, out)) return null_argument();
  return guarded([&] {
    auto ordering = ordering_from(faces, n);
    if (ordering.size() != mu->value.faces())
      throw mvfold::Error(mvfold::ErrorCode::InvalidOrdering, "ordering length does not match the strip");
    *out = mvfold::is_valid(mu->value, ordering) ? 1 : 0;
  });
}

mvfold_status mvfold_count_oracle(const mvfold_assignment* mu, size_t face_limit, char** out) {
  if (any_null(mu, out)) return null_argument();
  return guarded([&] {
    *out = dup(mvfold::count_oracle(mu->value, face_limit ? face_limit : mvfold::kDefaultOracleLimit).to_string());
  });
}

mvfold_status mvfold_count_fast(const mvfold_assignment* mu, char** out) {
  if (any_null(mu, out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::count_fast(mu->value).to_string()); });
}

mvfold_status mvfold_enumerate(const mvfold_assignment* mu, mvfold_folding_visitor visitor, void* user,
                               char** visited) {
  if (any_null(mu, visitor)) return null_argument();
  return guarded([&] {
    mvfold::FoldCount n = mvfold::enumerate_foldings(mu->value, [&](mvfold::LayerOrdering ordering) {
      return visitor(ordering.faces().data(), ordering.size(), user) == 0;
    });
    if (visited) *visited = dup(n.to_string());
  });
}

mvfold_status mvfold_verify_lemma_structure(const mvfold_assignment* mu, const size_t* faces, size_t n,
                                            int* out) {
  if (any_null(mu, faces, out)) return null_argument();
  return guarded([&] { *out = mvfold::verify_lemma_structure(mu->value, ordering_from(faces, n)) ? 1 : 0; });
}

mvfold_status mvfold_catalan(size_t k, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::catalan(k).to_string()); });
}

mvfold_status mvfold_triangle_row(size_t r, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    std::string text;
    for (const auto& v : mvfold::triangle_row(r)) {
      if (!text.empty()) text.push_back(' ');
      text += v.to_string();
    }
    *out = dup(text);
  });
}

mvfold_status mvfold_uniform(size_t creases, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::uniform(creases).to_string()); });
}

mvfold_status mvfold_two_block(size_t a, size_t b, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::two_block(a, b).to_string()); });
}

mvfold_status mvfold_two_alternating(size_t blocks, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::two_alternating(blocks).to_string()); });
}

mvfold_status mvfold_walk_count_dp(size_t m, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::walk_count_dp(m).to_string()); });
}

mvfold_status mvfold_bounds(const mvfold_assignment* mu, char** lower, char** upper) {
  if (any_null(mu, lower, upper)) return null_argument();
  return guarded([&] {
    auto b = mvfold::bounds(mvfold::to_blocks(mu->value));
    std::string lo = b.lower.to_string();
    std::string hi = b.upper.to_string();
    char* l = dup(lo);
    try {
      *upper = dup(hi);
    } catch (...) {
      std::free(l);
      throw;
    }
    *lower = l;
  });
}

mvfold_status mvfold_walk_matrix(size_t m, mvfold_matrix** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = new mvfold_matrix{mvfold::walk_matrix(m).entries()}; });
}

mvfold_status mvfold_step_matrix(size_t m, mvfold_matrix** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = new mvfold_matrix{mvfold::step_matrix(m)}; });
}

void mvfold_matrix_free(mvfold_matrix* matrix) { delete matrix; }

mvfold_status mvfold_matrix_shape(const mvfold_matrix* matrix, size_t* rows, size_t* cols) {
  if (any_null(matrix, rows, cols)) return null_argument();
  *rows = matrix->value.rows();
  *cols = matrix->value.cols();
  last_error.clear();
  return MVFOLD_OK;
}

mvfold_status mvfold_matrix_entry(const mvfold_matrix* matrix, size_t row, size_t col, char** out) {
  if (any_null(matrix, out)) return null_argument();
  return guarded([&] {
    if (row >= matrix->value.rows() || col >= matrix->value.cols())
      throw mvfold::Error(mvfold::ErrorCode::Domain, "matrix index out of range");
    *out = dup(matrix->value(row, col).to_string());
  });
}

mvfold_status mvfold_matrix_sum(const mvfold_matrix* matrix, char** out) {
  if (any_null(matrix, out)) return null_argument();
  return guarded([&] { *out = dup(matrix->value.sum().to_string()); });
}

mvfold_status mvfold_matrix_format(const mvfold_matrix* matrix, char** out) {
  if (any_null(matrix, out)) return null_argument();
  return guarded([&] {
    std::string text;
    for (std::size_t r = 0; r < matrix->value.rows(); ++r) {
      for (std::size_t c = 0; c < matrix->value.cols(); ++c) {
        if (c) text.push_back(' ');
        text += matrix->value(r, c).to_string();
      }
      text.push_back('\n');
    }
    *out = dup(text);
  });
}

mvfold_status mvfold_total_foldings(size_t faces, const mvfold_sweep_options* options, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::total_foldings(faces, sweep_options(options)).to_string()); });
}

mvfold_status mvfold_max_search(size_t faces, int restricted, const mvfold_sweep_options* options,
                                mvfold_records** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    std::optional<mvfold::RestrictionFilter> filter;
    if (restricted) filter = mvfold::RestrictionFilter::conjecture();
    *out = new mvfold_records{mvfold::max_search(faces, filter, sweep_options(options))};
  });
}

mvfold_status mvfold_records_create(mvfold_records** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = new mvfold_records{}; });
}

mvfold_status mvfold_records_append(mvfold_records* records, const mvfold_records* more) {
  if (any_null(records, more)) return null_argument();
  return guarded([&] {
    std::vector<mvfold::SearchRecord> copy = more->value;
    records->value.insert(records->value.end(), copy.begin(), copy.end());
  });
}

mvfold_status mvfold_records_parse_jsonl(const char* text, mvfold_records** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { *out = new mvfold_records{mvfold::parse_jsonl(text)}; });
}

void mvfold_records_free(mvfold_records* records) { delete records; }

mvfold_status mvfold_records_size(const mvfold_records* records, size_t* out) {
  if (any_null(records, out)) return null_argument();
  *out = records->value.size();
  last_error.clear();
  return MVFOLD_OK;
}

mvfold_status mvfold_records_get(const mvfold_records* records, size_t index, size_t* faces, char** assignment,
                                 char** count) {
  if (any_null(records)) return null_argument();
  return guarded([&] {
    if (index >= records->value.size())
      throw mvfold::Error(mvfold::ErrorCode::Domain, "record index out of range");
    const auto& r = records->value[index];
    char* a = assignment ? dup(r.assignment.str()) : nullptr;
    char* c = nullptr;
    try {
      if (count) c = dup(r.count.to_string());
    } catch (...) {
      std::free(a);
      throw;
    }
    if (faces) *faces = r.n;
    if (assignment) *assignment = a;
    if (count) *count = c;
  });
}

mvfold_status mvfold_records_to_jsonl(const mvfold_records* records, char** out) {
  if (any_null(records, out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::to_jsonl(records->value)); });
}

mvfold_status mvfold_records_scatter(const mvfold_records* records, char** out) {
  if (any_null(records, out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::emit_scatter(records->value)); });
}

mvfold_status mvfold_records_curve(const mvfold_records* records, char** out) {
  if (any_null(records, out)) return null_argument();
  return guarded([&] { *out = dup(mvfold::emit_curve(records->value)); });
}

mvfold_status mvfold_equal_blocks_series(size_t m, size_t k_max, size_t reach_faces, mvfold_series** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    *out = new mvfold_series{
        mvfold::equal_blocks_series(m, k_max, reach_faces ? reach_faces : mvfold::kDefaultSeriesReach)};
  });
}

void mvfold_series_free(mvfold_series* series) { delete series; }

mvfold_status mvfold_series_size(const mvfold_series* series, size_t* out) {
  if (any_null(series, out)) return null_argument();
  *out = series->value.size();
  last_error.clear();
  return MVFOLD_OK;
}

mvfold_status mvfold_series_row(const mvfold_series* series, size_t index, size_t* k, char** count, double* ratio,
                                char** error) {
  if (any_null(series)) return null_argument();
  return guarded([&] {
    if (index >= series->value.size())
      throw mvfold::Error(mvfold::ErrorCode::Domain, "series index out of range");
    const auto& row = series->value[index];
    char* c = (count && row.count) ? dup(row.count->to_string()) : nullptr;
    char* e = nullptr;
    try {
      if (error && !row.count) e = dup(row.error);
    } catch (...) {
      std::free(c);
      throw;
    }
    if (k) *k = row.k;
    if (ratio) *ratio = row.ratio;
    if (count) *count = c;
    if (error) *error = e;
  });
}

mvfold_status mvfold_render(const mvfold_assignment* mu, const size_t* faces, size_t n,
                            mvfold_render_format format, char** out) {
  if (any_null(mu, faces, out)) return null_argument();
  return guarded([&] {
    auto scene = mvfold::build_scene(mu->value, ordering_from(faces, n));
    *out = dup(format == MVFOLD_RENDER_ASCII ? mvfold::to_ascii(scene) : mvfold::to_svg(scene));
  });
}

}  // extern "C"
