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

// Strips, mountain-valley assignments and layer orderings.
//
// Conventions used throughout the library:
//   * faces are labeled 0..n-1, crease i joins faces i and i+1;
//   * face 0 has its labeled side facing right, so even faces face right
//     and odd faces face left;
//   * crease i lands on the top side when i is even, bottom when odd.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mvfold {

enum class CreaseDir : std::uint8_t { Mountain, Valley };

constexpr CreaseDir complement(CreaseDir d) {
  return d == CreaseDir::Mountain ? CreaseDir::Valley : CreaseDir::Mountain;
}

constexpr char to_char(CreaseDir d) { return d == CreaseDir::Mountain ? 'M' : 'V'; }

enum class Side : std::uint8_t { Top, Bottom };

constexpr Side side_of_crease(std::size_t crease) {
  return crease % 2 == 0 ? Side::Top : Side::Bottom;
}

struct BlockSpec;

/// Crease directions of a 1 x n strip. n = creases + 1 >= 1.
class MvAssignment {
 public:
  MvAssignment() = default;  // the single-face strip
  explicit MvAssignment(std::vector<CreaseDir> creases) : creases_(std::move(creases)) {}

  std::size_t faces() const { return creases_.size() + 1; }
  std::size_t creases() const { return creases_.size(); }
  CreaseDir operator[](std::size_t i) const { return creases_[i]; }
  std::span<const CreaseDir> directions() const { return creases_; }

  /// Raw form ("MMVV").
  std::string str() const;
  /// Compact block form ("M2V2"); every run carries its count.
  std::string block_str() const;

  friend bool operator==(const MvAssignment&, const MvAssignment&) = default;
  /// Lexicographic with M < V, matching the raw string.
  friend std::strong_ordering operator<=>(const MvAssignment& a, const MvAssignment& b) {
    return a.str() <=> b.str();
  }

 private:
  std::vector<CreaseDir> creases_;
};

/// Run-length form of an assignment: blocks alternate direction starting
/// from `first`.
struct BlockSpec {
  CreaseDir first = CreaseDir::Mountain;
  std::vector<std::size_t> sizes;

  std::size_t creases() const;
  MvAssignment expand() const;

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// Accepts raw ("MMVV") and block ("M2V2", "M2VM1") text; a letter may be
/// followed by a positive decimal repeat count. The empty string is the
/// one-face strip.
MvAssignment parse_assignment(std::string_view text);

BlockSpec to_blocks(const MvAssignment& mu);

MvAssignment reverse(const MvAssignment& mu);
MvAssignment complement(const MvAssignment& mu);
/// Least of {mu, rev mu, comp mu, rev comp mu} in raw-string order.
MvAssignment canonical(const MvAssignment& mu);
/// Number of distinct assignments in the symmetry orbit of mu (1, 2 or 4).
std::size_t orbit_size(const MvAssignment& mu);

/// Assignment from the low `creases` bits of `mask`; bit i set means
/// crease i is a valley.
MvAssignment from_mask(std::uint64_t mask, std::size_t creases);

/// (M^2 V^2)^(m/2) for even m, (M^2 V^2)^((m-1)/2) M^2 for odd m.
MvAssignment two_alternating_assignment(std::size_t blocks);
bool is_two_alternating(const MvAssignment& mu);

/// Faces listed left to right in the folded stack; sigma (face -> position)
/// is kept alongside.
class LayerOrdering {
 public:
  /// Throws Error(InvalidOrdering) unless `faces_left_to_right` is a
  /// permutation of 0..n-1.
  explicit LayerOrdering(std::vector<std::size_t> faces_left_to_right);

  std::size_t size() const { return faces_.size(); }
  std::size_t face_at(std::size_t position) const { return faces_[position]; }
  std::size_t position_of(std::size_t face) const { return sigma_[face]; }
  std::span<const std::size_t> faces() const { return faces_; }

  std::string str() const;  // "1 0 2"

  friend bool operator==(const LayerOrdering& a, const LayerOrdering& b) {
    return a.faces_ == b.faces_;
  }

 private:
  std::vector<std::size_t> faces_;
  std::vector<std::size_t> sigma_;
};

/// Relation crease i imposes between sigma(i) and sigma(i+1).
enum class Relation : std::uint8_t { Greater, Less };

Relation mv_constraint(const MvAssignment& mu, std::size_t crease);

/// Both conditions of a valid layer ordering: every crease respects its
/// MV relation, and no two arcs on the same side interleave.
bool is_valid(const MvAssignment& mu, const LayerOrdering& ordering);

struct Arc {
  std::size_t crease = 0;  // joins faces crease and crease+1
  Side side = Side::Top;
  CreaseDir dir = CreaseDir::Mountain;
  std::size_t lo = 0;  // leftmost endpoint position
  std::size_t hi = 0;  // rightmost endpoint position
};

std::vector<Arc> arcs_of(const MvAssignment& mu, const LayerOrdering& ordering);

struct BottomArc {
  Arc arc;
  bool covered = false;
};

/// All bottom arcs in crease order. An arc is covered when its interval
/// lies inside the interval of a bottom arc with a smaller crease index.
std::vector<BottomArc> uncovered_bottom_arcs(const MvAssignment& mu, const LayerOrdering& ordering);

}  // namespace mvfold
