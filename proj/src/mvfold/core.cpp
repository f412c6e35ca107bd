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

#include "mvfold/core.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "mvfold/error.hpp"

namespace mvfold {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::InvalidOrdering: return "invalid ordering";
    case ErrorCode::Limit: return "limit exceeded";
    case ErrorCode::Overflow: return "overflow";
  }
  return "unknown error";
}

std::string MvAssignment::str() const {
  std::string out;
  out.reserve(creases_.size());
  for (CreaseDir d : creases_) out.push_back(to_char(d));
  return out;
}

std::string MvAssignment::block_str() const {
  BlockSpec blocks = to_blocks(*this);
  std::string out;
  CreaseDir dir = blocks.first;
  for (std::size_t size : blocks.sizes) {
    out.push_back(to_char(dir));
    out += std::to_string(size);
    dir = mvfold::complement(dir);
  }
  return out;
}

std::size_t BlockSpec::creases() const {
  std::size_t total = 0;
  for (std::size_t s : sizes) total += s;
  return total;
}

MvAssignment BlockSpec::expand() const {
  std::vector<CreaseDir> out;
  out.reserve(creases());
  CreaseDir dir = first;
  for (std::size_t size : sizes) {
    if (size == 0) throw Error(ErrorCode::Domain, "block sizes must be positive");
    out.insert(out.end(), size, dir);
    dir = mvfold::complement(dir);
  }
  return MvAssignment(std::move(out));
}

MvAssignment parse_assignment(std::string_view text) {
  std::vector<CreaseDir> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char letter = text[i];
    CreaseDir dir;
    if (letter == 'M') {
      dir = CreaseDir::Mountain;
    } else if (letter == 'V') {
      dir = CreaseDir::Valley;
    } else {
      throw Error(ErrorCode::Parse, "unexpected character '" + std::string(1, letter) +
                                        "' at offset " + std::to_string(i) + " in assignment '" +
                                        std::string(text) + "'");
    }
    ++i;
    std::size_t start = i;
    std::size_t count = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      count = count * 10 + static_cast<std::size_t>(text[i] - '0');
      if (count > (std::size_t{1} << 20))
        throw Error(ErrorCode::Parse, "block size too large in '" + std::string(text) + "'");
      ++i;
    }
    if (i == start) {
      count = 1;
    } else if (count == 0) {
      throw Error(ErrorCode::Parse,
                  "zero block size at offset " + std::to_string(start) + " in '" + std::string(text) + "'");
    }
    out.insert(out.end(), count, dir);
  }
  return MvAssignment(std::move(out));
}

BlockSpec to_blocks(const MvAssignment& mu) {
  BlockSpec spec;
  if (mu.creases() == 0) return spec;
  spec.first = mu[0];
  std::size_t run = 1;
  for (std::size_t i = 1; i < mu.creases(); ++i) {
    if (mu[i] == mu[i - 1]) {
      ++run;
    } else {
      spec.sizes.push_back(run);
      run = 1;
    }
  }
  spec.sizes.push_back(run);
  return spec;
}

MvAssignment reverse(const MvAssignment& mu) {
  std::vector<CreaseDir> out(mu.directions().rbegin(), mu.directions().rend());
  return MvAssignment(std::move(out));
}

MvAssignment complement(const MvAssignment& mu) {
  std::vector<CreaseDir> out;
  out.reserve(mu.creases());
  for (CreaseDir d : mu.directions()) out.push_back(complement(d));
  return MvAssignment(std::move(out));
}

namespace {

std::array<MvAssignment, 4> orbit(const MvAssignment& mu) {
  MvAssignment comp = complement(mu);
  return {mu, reverse(mu), reverse(comp), comp};
}

}  // namespace

MvAssignment canonical(const MvAssignment& mu) {
  auto members = orbit(mu);
  return *std::min_element(members.begin(), members.end());
}

std::size_t orbit_size(const MvAssignment& mu) {
  auto members = orbit(mu);
  std::set<std::string> distinct;
  for (const auto& m : members) distinct.insert(m.str());
  return distinct.size();
}

MvAssignment from_mask(std::uint64_t mask, std::size_t creases) {
  std::vector<CreaseDir> out(creases);
  for (std::size_t i = 0; i < creases; ++i)
    out[i] = (mask >> i) & 1u ? CreaseDir::Valley : CreaseDir::Mountain;
  return MvAssignment(std::move(out));
}

MvAssignment two_alternating_assignment(std::size_t blocks) {
  if (blocks == 0) throw Error(ErrorCode::Domain, "a 2-alternating assignment needs at least one block");
  BlockSpec spec{CreaseDir::Mountain, std::vector<std::size_t>(blocks, 2)};
  return spec.expand();
}

bool is_two_alternating(const MvAssignment& mu) {
  if (mu.creases() == 0) return false;
  BlockSpec spec = to_blocks(mu);
  return spec.first == CreaseDir::Mountain &&
         std::all_of(spec.sizes.begin(), spec.sizes.end(), [](std::size_t s) { return s == 2; });
}

LayerOrdering::LayerOrdering(std::vector<std::size_t> faces_left_to_right)
    : faces_(std::move(faces_left_to_right)), sigma_(faces_.size(), faces_.size()) {
  if (faces_.empty()) throw Error(ErrorCode::InvalidOrdering, "layer ordering must contain at least one face");
  for (std::size_t p = 0; p < faces_.size(); ++p) {
    std::size_t f = faces_[p];
    if (f >= faces_.size() || sigma_[f] != faces_.size())
      throw Error(ErrorCode::InvalidOrdering, "layer ordering is not a permutation of 0..n-1");
    sigma_[f] = p;
  }
}

std::string LayerOrdering::str() const {
  std::string out;
  for (std::size_t p = 0; p < faces_.size(); ++p) {
    if (p) out.push_back(' ');
    out += std::to_string(faces_[p]);
  }
  return out;
}

Relation mv_constraint(const MvAssignment& mu, std::size_t crease) {
  if (crease >= mu.creases())
    throw Error(ErrorCode::Domain, "crease index " + std::to_string(crease) + " out of range for " +
                                       std::to_string(mu.faces()) + " faces");
  bool face_right = crease % 2 == 0;
  bool mountain = mu[crease] == CreaseDir::Mountain;
  return mountain == face_right ? Relation::Greater : Relation::Less;
}

std::vector<Arc> arcs_of(const MvAssignment& mu, const LayerOrdering& ordering) {
  if (ordering.size() != mu.faces())
    throw Error(ErrorCode::InvalidOrdering, "ordering has " + std::to_string(ordering.size()) +
                                                " faces, assignment has " + std::to_string(mu.faces()));
  std::vector<Arc> arcs;
  arcs.reserve(mu.creases());
  for (std::size_t i = 0; i < mu.creases(); ++i) {
    std::size_t a = ordering.position_of(i);
    std::size_t b = ordering.position_of(i + 1);
    arcs.push_back(Arc{i, side_of_crease(i), mu[i], std::min(a, b), std::max(a, b)});
  }
  return arcs;
}

namespace {

bool strictly_inside(std::size_t x, const Arc& arc) { return arc.lo < x && x < arc.hi; }

bool interleave(const Arc& a, const Arc& b) {
  return strictly_inside(b.lo, a) != strictly_inside(b.hi, a);
}

bool contains(const Arc& outer, const Arc& inner) { return outer.lo < inner.lo && inner.hi < outer.hi; }

}  // namespace

bool is_valid(const MvAssignment& mu, const LayerOrdering& ordering) {
  auto arcs = arcs_of(mu, ordering);
  for (std::size_t i = 0; i < mu.creases(); ++i) {
    bool greater = ordering.position_of(i) > ordering.position_of(i + 1);
    if (greater != (mv_constraint(mu, i) == Relation::Greater)) return false;
  }
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 2; j < arcs.size(); j += 2)
      if (interleave(arcs[i], arcs[j])) return false;
  return true;
}

std::vector<BottomArc> uncovered_bottom_arcs(const MvAssignment& mu, const LayerOrdering& ordering) {
  if (ordering.size() != mu.faces() || !is_valid(mu, ordering))
    throw Error(ErrorCode::InvalidOrdering, "uncovered_bottom_arcs requires a valid layer ordering");
  auto arcs = arcs_of(mu, ordering);
  std::vector<BottomArc> out;
  for (std::size_t i = 1; i < arcs.size(); i += 2) {
    bool covered = false;
    for (std::size_t j = 1; j < i && !covered; j += 2) covered = contains(arcs[j], arcs[i]);
    out.push_back(BottomArc{arcs[i], covered});
  }
  return out;
}

}  // namespace mvfold
