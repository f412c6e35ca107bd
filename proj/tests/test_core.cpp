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


#include <doctest.h>

#include <random>
#include <set>

#include "mvfold/core.hpp"
#include "mvfold/error.hpp"
#include "oracle.hpp"

using namespace mvfold;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Domain;
}

}  // namespace

TEST_CASE("parse raw and block text") {
  CHECK(parse_assignment("MMVV").str() == "MMVV");
  CHECK(parse_assignment("M2V2").str() == "MMVV");
  CHECK(parse_assignment("M2VM1").str() == "MMVM");
  CHECK(parse_assignment("V10").creases() == 10);
  CHECK(parse_assignment("").faces() == 1);
  CHECK(parse_assignment("MMVV").block_str() == "M2V2");
  CHECK(parse_assignment("MVM").block_str() == "M1V1M1");
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_assignment("MXV"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_assignment("M0V"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_assignment("3M"); }) == ErrorCode::Parse);
  CHECK(code_of([] { BlockSpec{CreaseDir::Mountain, {2, 0}}.expand(); }) == ErrorCode::Domain);
}

TEST_CASE("raw and block forms round trip") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    std::size_t creases = rng() % 20;
    MvAssignment mu = from_mask(rng(), creases);
    CHECK(parse_assignment(mu.str()) == mu);
    CHECK(parse_assignment(mu.block_str()) == mu);
    CHECK(to_blocks(mu).expand() == mu);
  }
}

TEST_CASE("symmetries") {
  MvAssignment mu = parse_assignment("MMVMV");
  CHECK(reverse(mu).str() == "VMVMM");
  CHECK(complement(mu).str() == "VVMVM");
  CHECK(reverse(reverse(mu)) == mu);
  CHECK(canonical(parse_assignment("VVMM")).str() == "MMVV");
  CHECK(orbit_size(parse_assignment("MMVV")) == 2);
  CHECK(orbit_size(parse_assignment("MVM")) == 2);
  CHECK(orbit_size(parse_assignment("MMV")) == 4);
  CHECK(orbit_size(parse_assignment("")) == 1);

  for (std::uint64_t mask = 0; mask < (1u << 9); ++mask) {
    MvAssignment m = from_mask(mask, 9);
    MvAssignment c = canonical(m);
    CHECK(canonical(c) == c);
    CHECK(canonical(reverse(m)) == c);
    CHECK(canonical(complement(m)) == c);
    CHECK(c <= m);
  }
}

TEST_CASE("orbit sizes partition the assignment space") {
  for (std::size_t creases = 0; creases <= 10; ++creases) {
    std::size_t covered = 0;
    for (std::uint64_t mask = 0; mask < (1ull << creases); ++mask) {
      MvAssignment m = from_mask(mask, creases);
      if (canonical(m) == m) covered += orbit_size(m);
    }
    CHECK(covered == (1ull << creases));
  }
}

TEST_CASE("two-alternating assignments") {
  CHECK(two_alternating_assignment(1).str() == "MM");
  CHECK(two_alternating_assignment(4).str() == "MMVVMMVV");
  CHECK(two_alternating_assignment(5).str() == "MMVVMMVVMM");
  CHECK(is_two_alternating(parse_assignment("MMVVMM")));
  CHECK_FALSE(is_two_alternating(parse_assignment("VVMM")));
  CHECK_FALSE(is_two_alternating(parse_assignment("MMV")));
  CHECK(code_of([] { two_alternating_assignment(0); }) == ErrorCode::Domain);
}

TEST_CASE("layer orderings") {
  LayerOrdering o({2, 0, 1});
  CHECK(o.face_at(0) == 2);
  CHECK(o.position_of(2) == 0);
  CHECK(o.position_of(1) == 2);
  CHECK(o.str() == "2 0 1");
  CHECK(code_of([] { LayerOrdering({0, 0, 1}); }) == ErrorCode::InvalidOrdering);
  CHECK(code_of([] { LayerOrdering({0, 3}); }) == ErrorCode::InvalidOrdering);
}

TEST_CASE("mv constraints follow face orientation") {
  MvAssignment mu = parse_assignment("MMVV");
  CHECK(mv_constraint(mu, 0) == Relation::Greater);
  CHECK(mv_constraint(mu, 1) == Relation::Less);
  CHECK(mv_constraint(mu, 2) == Relation::Less);
  CHECK(mv_constraint(mu, 3) == Relation::Greater);
  CHECK(code_of([&] { mv_constraint(mu, 4); }) == ErrorCode::Domain);
}

TEST_CASE("is_valid agrees with the literal definition") {
  for (std::size_t creases = 0; creases <= 5; ++creases) {
    for (std::uint64_t mask = 0; mask < (1ull << creases); ++mask) {
      MvAssignment mu = from_mask(mask, creases);
      std::vector<std::size_t> perm(creases + 1);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        CHECK(is_valid(mu, LayerOrdering(perm)) == oracle::literal_valid(mu.str(), perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("arcs") {
  MvAssignment mu = parse_assignment("MMVV");
  LayerOrdering o({4, 1, 2, 3, 0});
  auto arcs = arcs_of(mu, o);
  REQUIRE(arcs.size() == 4);
  CHECK(arcs[0].side == Side::Top);
  CHECK(arcs[1].side == Side::Bottom);
  CHECK(arcs[2].dir == CreaseDir::Valley);
  CHECK(arcs[0].lo == 1);
  CHECK(arcs[0].hi == 4);
  CHECK(code_of([&] { arcs_of(mu, LayerOrdering({1, 0})); }) == ErrorCode::InvalidOrdering);
}

TEST_CASE("fully nested spirals leave one uncovered bottom arc") {
  for (std::size_t n = 3; n <= 9; ++n) {
    // Odd faces ascend on the left, even faces descend on the right.
    std::vector<std::size_t> faces;
    std::vector<std::size_t> left;
    for (std::size_t f = 1; f < n; f += 2) left.push_back(f);
    std::vector<std::size_t> right;
    for (std::size_t f = 0; f < n; f += 2) right.push_back(f);
    faces = left;
    faces.insert(faces.end(), right.rbegin(), right.rend());

    MvAssignment mu(std::vector<CreaseDir>(n - 1, CreaseDir::Mountain));
    LayerOrdering o(faces);
    REQUIRE(is_valid(mu, o));
    std::size_t uncovered = 0;
    for (const BottomArc& b : uncovered_bottom_arcs(mu, o)) uncovered += !b.covered;
    CHECK(uncovered == 1);
  }
}

TEST_CASE("uncovered arcs of the four MMMM foldings") {
  MvAssignment mu = parse_assignment("MMMM");
  auto uncovered = [&](std::vector<std::size_t> f) {
    std::size_t k = 0;
    for (const BottomArc& b : uncovered_bottom_arcs(mu, LayerOrdering(f))) k += !b.covered;
    return k;
  };
  CHECK(uncovered({1, 3, 4, 2, 0}) == 1);
  CHECK(uncovered({3, 4, 1, 0, 2}) == 2);
  CHECK(uncovered({3, 1, 0, 2, 4}) == 2);
  CHECK(uncovered({1, 0, 3, 4, 2}) == 1);
}
