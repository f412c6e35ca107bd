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

// mvfold command line. Everything goes through the C API in mvfold.h.
//
// Exit codes: 0 success, 2 usage error, 3 --check mismatch, 4 unparsable
// input, 5 argument out of range, 6 size limit, 7 count overflow,
// 1 anything else.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvfold/mvfold.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct CliFailure {
  int exit_code;
  std::string message;
};

int exit_code_for(mvfold_status status) {
  switch (status) {
    case MVFOLD_ERR_PARSE: return 4;
    case MVFOLD_ERR_DOMAIN:
    case MVFOLD_ERR_INVALID_ORDERING: return 5;
    case MVFOLD_ERR_LIMIT: return 6;
    case MVFOLD_ERR_OVERFLOW: return 7;
    default: return 1;
  }
}

void check(mvfold_status status) {
  if (status != MVFOLD_OK)
    throw CliFailure{exit_code_for(status), std::string(mvfold_status_name(status)) + ": " + mvfold_last_error()};
}

std::string take(char* text) {
  std::string out = text ? text : "";
  mvfold_string_free(text);
  return out;
}

struct AssignmentDeleter {
  void operator()(mvfold_assignment* p) const { mvfold_assignment_free(p); }
};
struct MatrixDeleter {
  void operator()(mvfold_matrix* p) const { mvfold_matrix_free(p); }
};
struct RecordsDeleter {
  void operator()(mvfold_records* p) const { mvfold_records_free(p); }
};
struct SeriesDeleter {
  void operator()(mvfold_series* p) const { mvfold_series_free(p); }
};
using Assignment = std::unique_ptr<mvfold_assignment, AssignmentDeleter>;
using Matrix = std::unique_ptr<mvfold_matrix, MatrixDeleter>;
using Records = std::unique_ptr<mvfold_records, RecordsDeleter>;
using Series = std::unique_ptr<mvfold_series, SeriesDeleter>;

Assignment parse(const std::string& text) {
  mvfold_assignment* raw = nullptr;
  check(mvfold_assignment_parse(text.c_str(), &raw));
  return Assignment(raw);
}

Assignment from_blocks(std::vector<size_t> sizes) {
  mvfold_assignment* raw = nullptr;
  check(mvfold_assignment_from_blocks(0, sizes.data(), sizes.size(), &raw));
  return Assignment(raw);
}

Assignment two_alternating(size_t blocks) {
  if (blocks == 0) return parse("");
  mvfold_assignment* raw = nullptr;
  check(mvfold_assignment_two_alternating(blocks, &raw));
  return Assignment(raw);
}

std::string raw_text(const mvfold_assignment* mu) {
  char* out = nullptr;
  check(mvfold_assignment_format(mu, MVFOLD_FORM_RAW, &out));
  return take(out);
}

std::string count_fast(const mvfold_assignment* mu) {
  char* out = nullptr;
  check(mvfold_count_fast(mu, &out));
  return take(out);
}

// Decimal strings without leading zeros compare by length, then lexically.
bool decimal_less_equal(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a <= b;
}

size_t parse_size(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw CliFailure{kExitUsage, std::string(what) + " must be a nonnegative integer, got '" + text + "'"};
  try {
    return static_cast<size_t>(std::stoull(text));
  } catch (const std::exception&) {
    throw CliFailure{kExitUsage, std::string(what) + " is out of range: '" + text + "'"};
  }
}

struct Globals {
  bool json = false;
  unsigned threads = 0;
};

mvfold_sweep_options sweep_options(const Globals& g, bool use_symmetry) {
  mvfold_sweep_options options{0, g.threads, use_symmetry ? 1 : 0};
  if (const char* env = std::getenv("MVFOLD_SWEEP_LIMIT"); env && *env) {
    options.limit = parse_size(env, "MVFOLD_SWEEP_LIMIT");
  }
  return options;
}

void emit(const std::string& line) {
  std::fwrite(line.data(), 1, line.size(), stdout);
  std::fputc('\n', stdout);
}

// ---- subcommands -----------------------------------------------------------

int run_count(const Globals& g, const std::string& text, bool oracle, size_t oracle_limit) {
  Assignment mu = parse(text);
  std::string value;
  if (oracle) {
    char* out = nullptr;
    check(mvfold_count_oracle(mu.get(), oracle_limit, &out));
    value = take(out);
  } else {
    value = count_fast(mu.get());
  }
  if (g.json) {
    ordered_json j{{"assignment", raw_text(mu.get())}, {"count", value}, {"method", oracle ? "oracle" : "fast"}};
    emit(j.dump());
  } else {
    emit(value);
  }
  return 0;
}

struct EnumerateState {
  bool json;
  bool failed = false;
};

int print_folding(const size_t* faces, size_t n, void* user) {
  auto* state = static_cast<EnumerateState*>(user);
  std::string line;
  if (state->json) {
    ordered_json j;
    j["faces"] = std::vector<size_t>(faces, faces + n);
    line = j.dump();
  } else {
    for (size_t i = 0; i < n; ++i) {
      if (i) line.push_back(' ');
      line += std::to_string(faces[i]);
    }
  }
  line.push_back('\n');
  if (std::fwrite(line.data(), 1, line.size(), stdout) != line.size() || std::fflush(stdout) != 0) {
    state->failed = true;
    return 1;
  }
  return 0;
}

int run_enumerate(const Globals& g, const std::string& text) {
  Assignment mu = parse(text);
  EnumerateState state{g.json};
  check(mvfold_enumerate(mu.get(), print_folding, &state, nullptr));
  return state.failed ? 1 : 0;
}

struct FormulaResult {
  std::string value;
  std::vector<std::string> extra_lines;  // matrix rows
  std::optional<std::string> enumerated;
  bool agrees = true;
};

FormulaResult evaluate_formula(const std::string& name, const std::vector<std::string>& params, bool with_check) {
  auto want = [&](size_t count) {
    if (params.size() != count)
      throw CliFailure{kExitUsage, "formula " + name + " takes " + std::to_string(count) + " parameter(s)"};
  };
  FormulaResult r;
  char* out = nullptr;
  if (name == "uniform") {
    want(1);
    size_t n = parse_size(params[0], "creases");
    check(mvfold_uniform(n, &out));
    r.value = take(out);
    if (with_check) r.enumerated = count_fast(from_blocks({n}).get());
  } else if (name == "two-block") {
    want(2);
    size_t a = parse_size(params[0], "a");
    size_t b = parse_size(params[1], "b");
    check(mvfold_two_block(a, b, &out));
    r.value = take(out);
    if (with_check) {
      std::vector<size_t> sizes{a};
      if (b) sizes.push_back(b);
      r.enumerated = count_fast(from_blocks(sizes).get());
    }
  } else if (name == "two-alternating") {
    want(1);
    size_t m = parse_size(params[0], "blocks");
    check(mvfold_two_alternating(m, &out));
    r.value = take(out);
    if (with_check) r.enumerated = count_fast(two_alternating(m).get());
  } else if (name == "walk-dp") {
    want(1);
    size_t m = parse_size(params[0], "m");
    check(mvfold_walk_count_dp(m, &out));
    r.value = take(out);
    if (with_check) r.enumerated = count_fast(two_alternating(m).get());
  } else if (name == "walk-matrix") {
    want(1);
    size_t m = parse_size(params[0], "m");
    mvfold_matrix* raw = nullptr;
    check(mvfold_walk_matrix(m, &raw));
    Matrix matrix(raw);
    check(mvfold_matrix_format(matrix.get(), &out));
    std::istringstream rows(take(out));
    for (std::string line; std::getline(rows, line);) r.extra_lines.push_back(line);
    check(mvfold_matrix_sum(matrix.get(), &out));
    r.value = take(out);
    if (with_check) r.enumerated = count_fast(two_alternating(m).get());
  } else if (name == "bounds") {
    want(1);
    Assignment mu = parse(params[0]);
    char* lower = nullptr;
    char* upper = nullptr;
    check(mvfold_bounds(mu.get(), &lower, &upper));
    std::string lo = take(lower);
    std::string hi = take(upper);
    r.value = lo + " " + hi;
    if (with_check) {
      r.enumerated = count_fast(mu.get());
      r.agrees = decimal_less_equal(lo, *r.enumerated) && decimal_less_equal(*r.enumerated, hi);
    }
    return r;
  } else if (name == "catalan") {
    want(1);
    check(mvfold_catalan(parse_size(params[0], "k"), &out));
    r.value = take(out);
  } else if (name == "triangle-row") {
    want(1);
    check(mvfold_triangle_row(parse_size(params[0], "row"), &out));
    r.value = take(out);
  } else {
    throw CliFailure{kExitUsage, "unknown formula '" + name +
                                     "' (uniform, two-block, two-alternating, walk-dp, walk-matrix, bounds, "
                                     "catalan, triangle-row)"};
  }
  if (r.enumerated) r.agrees = *r.enumerated == r.value;
  return r;
}

int run_formula(const Globals& g, const std::string& name, const std::vector<std::string>& params, bool with_check) {
  FormulaResult r = evaluate_formula(name, params, with_check);
  const bool checked = with_check && r.enumerated.has_value();
  if (g.json) {
    ordered_json j{{"formula", name}, {"params", params}, {"value", r.value}};
    if (!r.extra_lines.empty()) j["matrix"] = r.extra_lines;
    if (checked) {
      j["enumerated"] = *r.enumerated;
      j["check"] = r.agrees ? "OK" : "MISMATCH";
    }
    emit(j.dump());
  } else {
    for (const auto& line : r.extra_lines) emit(line);
    if (!checked) {
      if (r.extra_lines.empty()) emit(r.value);
    } else if (r.agrees) {
      emit(r.value + " OK");
    } else {
      emit(r.value + " MISMATCH " + *r.enumerated);
    }
  }
  return checked && !r.agrees ? kExitMismatch : 0;
}

int run_bounds(const Globals& g, const std::string& text) {
  Assignment mu = parse(text);
  char* lower = nullptr;
  char* upper = nullptr;
  check(mvfold_bounds(mu.get(), &lower, &upper));
  std::string lo = take(lower);
  std::string hi = take(upper);
  if (g.json) {
    emit(ordered_json{{"assignment", raw_text(mu.get())}, {"lower", lo}, {"upper", hi}}.dump());
  } else {
    emit(lo + " " + hi);
  }
  return 0;
}

int run_total(const Globals& g, size_t n, bool use_symmetry) {
  auto options = sweep_options(g, use_symmetry);
  char* out = nullptr;
  check(mvfold_total_foldings(n, &options, &out));
  std::string total = take(out);
  if (g.json) {
    emit(ordered_json{{"n", n}, {"total", total}}.dump());
  } else {
    emit(total);
  }
  return 0;
}

int run_search_max(const Globals& g, size_t n, std::optional<size_t> n_max, bool restricted, bool use_symmetry) {
  auto options = sweep_options(g, use_symmetry);
  size_t last = n_max.value_or(n);
  if (last < n) throw CliFailure{kExitUsage, "search-max range is empty"};
  mvfold_records* raw = nullptr;
  check(mvfold_records_create(&raw));
  Records all(raw);
  for (size_t faces = n; faces <= last; ++faces) {
    mvfold_records* found = nullptr;
    check(mvfold_max_search(faces, restricted ? 1 : 0, &options, &found));
    Records batch(found);
    check(mvfold_records_append(all.get(), batch.get()));
  }
  if (g.json) {
    char* out = nullptr;
    check(mvfold_records_to_jsonl(all.get(), &out));
    std::fputs(take(out).c_str(), stdout);
    return 0;
  }
  size_t size = 0;
  check(mvfold_records_size(all.get(), &size));
  for (size_t i = 0; i < size; ++i) {
    size_t faces = 0;
    char* assignment = nullptr;
    char* count = nullptr;
    check(mvfold_records_get(all.get(), i, &faces, &assignment, &count));
    std::string a = take(assignment);
    emit(std::to_string(faces) + " " + a + " " + take(count));
  }
  return 0;
}

int run_series(const Globals& g, const std::vector<size_t>& equal_blocks, size_t reach) {
  mvfold_series* raw = nullptr;
  const size_t m = equal_blocks.at(0);
  check(mvfold_equal_blocks_series(m, equal_blocks.at(1), reach, &raw));
  Series series(raw);
  size_t size = 0;
  check(mvfold_series_size(series.get(), &size));
  for (size_t i = 0; i < size; ++i) {
    size_t k = 0;
    char* count = nullptr;
    double ratio = 0;
    char* error = nullptr;
    check(mvfold_series_row(series.get(), i, &k, &count, &ratio, &error));
    bool in_reach = count != nullptr;
    std::string c = take(count);
    std::string e = take(error);
    if (g.json) {
      ordered_json j{{"m", m}, {"k", k}, {"faces", m * k + 1}};
      if (in_reach) {
        j["count"] = c;
        j["ratio"] = ratio;
      } else {
        j["error"] = e;
      }
      emit(j.dump());
    } else if (in_reach) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g", ratio);
      emit(std::to_string(k) + " " + c + " " + buf);
    } else {
      emit(std::to_string(k) + " - " + e);
    }
  }
  return 0;
}

struct RenderState {
  const mvfold_assignment* mu = nullptr;
  mvfold_render_format format = MVFOLD_RENDER_SVG;
  bool all = false;
  size_t index = 0;
  size_t seen = 0;
  std::vector<std::pair<std::vector<size_t>, std::string>> rendered;
  mvfold_status status = MVFOLD_OK;
  std::string error;
};

int render_one(const size_t* faces, size_t n, void* user) {
  auto* state = static_cast<RenderState*>(user);
  size_t current = state->seen++;
  if (!state->all && current != state->index) return 0;
  char* out = nullptr;
  mvfold_status s = mvfold_render(state->mu, faces, n, state->format, &out);
  if (s != MVFOLD_OK) {
    state->status = s;
    state->error = mvfold_last_error();
    return 1;
  }
  state->rendered.emplace_back(std::vector<size_t>(faces, faces + n), take(out));
  return state->all ? 0 : 1;
}

int run_render(const Globals& g, const std::string& text, bool all, size_t index, const std::string& format) {
  Assignment mu = parse(text);
  RenderState state;
  state.mu = mu.get();
  state.format = format == "ascii" ? MVFOLD_RENDER_ASCII : MVFOLD_RENDER_SVG;
  state.all = all;
  state.index = index;
  check(mvfold_enumerate(mu.get(), render_one, &state, nullptr));
  if (state.status != MVFOLD_OK) throw CliFailure{exit_code_for(state.status), state.error};
  if (!all && state.rendered.empty())
    throw CliFailure{5, "folding index " + std::to_string(index) + " out of range (" + std::to_string(state.seen) +
                            " foldings)"};
  for (size_t i = 0; i < state.rendered.size(); ++i) {
    const auto& [faces, body] = state.rendered[i];
    if (g.json) {
      ordered_json j{{"index", all ? i : index}, {"faces", faces}, {"format", format}, {"text", body}};
      emit(j.dump());
    } else {
      if (i) std::fputc('\n', stdout);
      std::fputs(body.c_str(), stdout);
    }
  }
  return 0;
}

int run_scatter(const Globals& g, const std::string& input, const std::string& curve_path) {
  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input);
    if (!in) throw CliFailure{4, "cannot open '" + input + "'"};
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  mvfold_records* raw = nullptr;
  check(mvfold_records_parse_jsonl(text.c_str(), &raw));
  Records records(raw);
  size_t size = 0;
  check(mvfold_records_size(records.get(), &size));
  if (size == 0) throw CliFailure{4, "scatter needs at least one record"};

  char* out = nullptr;
  check(mvfold_records_scatter(records.get(), &out));
  std::string scatter = take(out);
  if (g.json) {
    std::istringstream lines(scatter);
    size_t n = 0;
    std::string count;
    while (lines >> n >> count) emit(ordered_json{{"n", n}, {"count", count}}.dump());
  } else {
    std::fputs(scatter.c_str(), stdout);
  }
  if (!curve_path.empty()) {
    check(mvfold_records_curve(records.get(), &out));
    std::ofstream curve(curve_path);
    curve << take(out);
    if (!curve) throw CliFailure{1, "cannot write '" + curve_path + "'"};
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of flat foldings of a 1 x n strip under a fixed mountain-valley assignment"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON lines instead of plain text");
  app.add_option("--threads", g.threads, "Worker cap for sweeps (0: all cores)");

  std::string assignment;
  int exit_code = 0;

  auto* count = app.add_subcommand("count", "Count valid foldings of an assignment");
  bool use_oracle = false;
  size_t oracle_limit = 0;
  count->add_option("assignment", assignment, "Raw (MMVV) or block (M2V2) assignment")->required();
  count->add_flag("--oracle", use_oracle, "Use the brute-force permutation oracle");
  count->add_option("--oracle-limit", oracle_limit, "Largest strip the oracle accepts (default 10)");

  auto* enumerate = app.add_subcommand("enumerate", "Stream every folding, faces left to right");
  enumerate->add_option("assignment", assignment, "Assignment")->required();

  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  std::string formula_name;
  std::vector<std::string> formula_params;
  bool formula_check = false;
  formula->add_option("name", formula_name, "uniform | two-block | two-alternating | walk-dp | walk-matrix | bounds")
      ->required();
  formula->add_option("params", formula_params, "Formula parameters");
  formula->add_flag("--check", formula_check, "Compare against the enumerator (exit 3 on mismatch)");

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the folding count");
  bounds->add_option("assignment", assignment, "Assignment")->required();

  auto* total = app.add_subcommand("total", "Total foldings over all assignments of an n-face strip");
  size_t total_n = 0;
  bool no_symmetry = false;
  total->add_option("n", total_n, "Faces")->required();
  total->add_flag("--no-symmetry", no_symmetry, "Count every assignment instead of orbit representatives");

  auto* search = app.add_subcommand("search-max", "Assignments with the most foldings");
  size_t search_n = 0;
  std::optional<size_t> search_n_max;
  bool restricted = false;
  search->add_option("n", search_n, "Faces")->required();
  search->add_option("n_max", search_n_max, "Optional last face count of a range");
  search->add_flag("--restricted", restricted, "Only block sizes 1-3, no two adjacent 3s");
  search->add_flag("--no-symmetry", no_symmetry, "Sweep every assignment instead of orbit representatives");

  auto* series = app.add_subcommand("series", "Equal-block-size series c(S(m,k))");
  std::vector<size_t> equal_blocks;
  size_t reach = 0;
  series->add_option("--equal-blocks", equal_blocks, "m k_max")->expected(2)->required();
  series->add_option("--reach", reach, "Largest strip to enumerate (default 33 faces)");

  auto* render = app.add_subcommand("render", "Draw foldings as meanders");
  bool render_all = false;
  size_t render_index = 0;
  std::string render_format = "svg";
  render->add_option("assignment", assignment, "Assignment")->required();
  auto* all_flag = render->add_flag("--all", render_all, "Render every folding");
  render->add_option("--index", render_index, "Folding to render in enumeration order (default 0)")
      ->excludes(all_flag);
  render->add_option("--format", render_format, "svg | ascii")->check(CLI::IsMember({"svg", "ascii"}));

  auto* scatter = app.add_subcommand("scatter", "Re-emit search records as '<n> <count>' plot data");
  std::string scatter_input;
  std::string curve_path;
  scatter->add_option("records", scatter_input, "JSON-lines records file ('-' or omitted: stdin)");
  scatter->add_option("--curve", curve_path, "Also write 2^n/n^(5/4) samples to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) exit_code = run_count(g, assignment, use_oracle, oracle_limit);
    else if (*enumerate) exit_code = run_enumerate(g, assignment);
    else if (*formula) exit_code = run_formula(g, formula_name, formula_params, formula_check);
    else if (*bounds) exit_code = run_bounds(g, assignment);
    else if (*total) exit_code = run_total(g, total_n, !no_symmetry);
    else if (*search) exit_code = run_search_max(g, search_n, search_n_max, restricted, !no_symmetry);
    else if (*series) exit_code = run_series(g, equal_blocks, reach);
    else if (*render) exit_code = run_render(g, assignment, render_all, render_index, render_format);
    else if (*scatter) exit_code = run_scatter(g, scatter_input, curve_path);
  } catch (const CliFailure& f) {
    std::cerr << "mvfold: " << f.message << "\n";
    return f.exit_code;
  }
  std::fflush(stdout);
  return exit_code;
}
