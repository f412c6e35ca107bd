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


// Drives the installed command-line tool and reads its output back.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "mvfold/enumerate.hpp"
#include "mvfold/formulas.hpp"
#include "mvfold/render.hpp"
#include "mvfold/search.hpp"

using namespace mvfold;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MVFOLD_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<json> lines_of(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    out.push_back(json::parse(line));
  }
  return out;
}

std::vector<std::size_t> faces_of(const json& j) { return j.at("faces").get<std::vector<std::size_t>>(); }

}  // namespace

TEST_CASE("plain output") {
  CHECK(run("count MMVV").out == "4\n");
  CHECK(run("count MVMVMV").out == "1\n");
  Run check = run("formula two-alternating 2 --check");
  CHECK(check.out == "4 OK\n");
  CHECK(check.status == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("count").status == 2);
  CHECK(run("formula nope 1").status == 2);
  CHECK(run("count MXV").status == 4);
  CHECK(run("formula catalan 0").status == 5);
  CHECK(run("render MMVV --index 9 --format ascii").status == 5);
  CHECK(run("total 30").status == 6);
  CHECK(run("formula catalan 100").status == 7);
  CHECK(run("total 6").status == 0);
}

TEST_CASE("sweep limit from the environment") {
  CHECK(run("total 6").out == "144\n");
  setenv("MVFOLD_SWEEP_LIMIT", "5", 1);
  Run r = run("total 6");
  unsetenv("MVFOLD_SWEEP_LIMIT");
  CHECK(r.status == 6);
}

TEST_CASE("count --json") {
  for (const char* args : {"--json count MMVV", "--json count M2V2 --oracle"}) {
    auto js = lines_of(run(args).out);
    REQUIRE(js.size() == 1);
    MvAssignment mu = parse_assignment(js[0].at("assignment").get<std::string>());
    CHECK(FoldCount::parse(js[0].at("count").get<std::string>()) == count_fast(mu));
  }
}

TEST_CASE("enumerate --json") {
  MvAssignment mu = parse_assignment("MMVVM");
  auto js = lines_of(run("--json enumerate MMVVM").out);
  CHECK(FoldCount(js.size()) == count_fast(mu));
  for (const json& j : js) CHECK(is_valid(mu, LayerOrdering(faces_of(j))));
}

TEST_CASE("formula --json") {
  auto one = [](const std::string& args) {
    auto js = lines_of(run("--json formula " + args).out);
    REQUIRE(js.size() == 1);
    return js[0];
  };
  json j = one("two-alternating 3 --check");
  CHECK(j.at("check") == "OK");
  CHECK(FoldCount::parse(j.at("value").get<std::string>()) == two_alternating(3));
  CHECK(FoldCount::parse(one("two-block 4 2").at("value").get<std::string>()) == two_block(4, 2));
  CHECK(FoldCount::parse(one("uniform 7").at("value").get<std::string>()) == uniform(7));
  CHECK(FoldCount::parse(one("walk-dp 5").at("value").get<std::string>()) == walk_count_dp(5));
  CHECK(FoldCount::parse(one("catalan 6").at("value").get<std::string>()) == catalan(6));
  json w = one("walk-matrix 6");
  CHECK(w.at("matrix").size() == 4);
  CHECK(w.at("matrix")[0] == "25 25 15 5");
  CHECK(one("triangle-row 4").at("value") == "1 4 9 14 14");
  CHECK(one("bounds MMVV").at("value") == "4 12");
}

TEST_CASE("bounds and total --json") {
  auto b = lines_of(run("--json bounds MMVMV").out);
  REQUIRE(b.size() == 1);
  Bounds want = bounds(to_blocks(parse_assignment("MMVMV")));
  CHECK(FoldCount::parse(b[0].at("lower").get<std::string>()) == want.lower);
  CHECK(FoldCount::parse(b[0].at("upper").get<std::string>()) == want.upper);
  auto t = lines_of(run("--json total 7").out);
  REQUIRE(t.size() == 1);
  CHECK(t[0].at("n") == 7);
  CHECK(FoldCount::parse(t[0].at("total").get<std::string>()) == total_foldings(7));
}

TEST_CASE("search-max --json round trips through records and scatter") {
  std::string text = run("--json search-max 5 7").out;
  auto records = parse_jsonl(text);
  REQUIRE_FALSE(records.empty());
  CHECK(to_jsonl(records) == text);
  for (const SearchRecord& r : records) CHECK(count_fast(r.assignment) == r.count);

  std::string path = "mvfold_cli_records.jsonl";
  {
    FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs(text.c_str(), f);
    std::fclose(f);
  }
  CHECK(run("scatter " + path).out == emit_scatter(records));
  auto js = lines_of(run("--json scatter " + path).out);
  CHECK(js.size() == 3);
  CHECK(run("scatter " + path + " --curve mvfold_cli_curve.txt").status == 0);
  std::remove(path.c_str());
  std::remove("mvfold_cli_curve.txt");
}

TEST_CASE("series --json") {
  auto js = lines_of(run("--json series --equal-blocks 2 3").out);
  REQUIRE(js.size() == 3);
  CHECK(js[2].at("count") == "11");
  CHECK(js[2].at("ratio").get<double>() > 0.0);
}

TEST_CASE("render --json") {
  MvAssignment mu = parse_assignment("MMVV");
  auto js = lines_of(run("--json render MMVV --all --format ascii").out);
  REQUIRE(js.size() == 4);
  for (const json& j : js) {
    LayerOrdering o(faces_of(j));
    CHECK(j.at("text").get<std::string>() == to_ascii(build_scene(mu, o)));
  }
  auto svg = lines_of(run("--json render MMVV --index 1 --format svg").out);
  REQUIRE(svg.size() == 1);
  CHECK(svg[0].at("text").get<std::string>() == to_svg(build_scene(mu, LayerOrdering(faces_of(svg[0])))));
}

TEST_CASE("ascii blocks are separated by blank lines") {
  std::string out = run("render MVM --all --format ascii").out;
  CHECK(out.find("\n\n") == std::string::npos);
  std::string many = run("render MMM --all --format ascii").out;
  CHECK(many.find("\n\n") != std::string::npos);
}
