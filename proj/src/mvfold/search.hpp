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

// Sweeps over the assignment space of a 1 x n strip.
//
// Assignments are split statically across workers and every result is
// written to the slot of its input index, so output never depends on the
// thread schedule.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvfold/core.hpp"
#include "mvfold/fold_count.hpp"

namespace mvfold {

inline constexpr std::size_t kDefaultSweepLimit = 16;
/// Restricted max searches may go this many faces past the sweep limit.
inline constexpr std::size_t kRestrictedHeadroom = 4;
inline constexpr std::size_t kDefaultSeriesReach = 33;

struct SweepOptions {
  std::size_t limit = kDefaultSweepLimit;  // largest face count accepted
  unsigned threads = 0;                    // 0: hardware concurrency
  bool use_symmetry = true;                // count orbit representatives only
};

/// Counts for each assignment, computed in parallel.
std::vector<FoldCount> count_all(std::span<const MvAssignment> assignments, unsigned threads);

/// t(n): sum of c(mu) over all 2^(n-1) assignments, 2 <= n <= limit.
FoldCount total_foldings(std::size_t faces, const SweepOptions& options = {});

struct SearchRecord {
  std::size_t n = 0;         // faces
  MvAssignment assignment;   // canonical
  FoldCount count;

  /// {"n":5,"assignment":"MMVV","count":"4"}
  std::string to_json() const;
  /// Throws Error(Parse) on malformed input, faces mismatch or a
  /// non-canonical assignment.
  static SearchRecord from_json(std::string_view line);

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

std::string to_jsonl(std::span<const SearchRecord> records);
/// Blank lines are skipped.
std::vector<SearchRecord> parse_jsonl(std::string_view text);

/// Block-size restriction: allowed sizes plus forbidden neighbouring pairs.
struct RestrictionFilter {
  std::vector<std::size_t> allowed_sizes;
  std::vector<std::pair<std::size_t, std::size_t>> forbidden_adjacent;

  /// Sizes in {1, 2, 3}, no two consecutive blocks of size 3.
  static RestrictionFilter conjecture();

  bool accepts(const BlockSpec& blocks) const;
  /// Every accepted block sequence summing to `creases`, first block M.
  std::vector<BlockSpec> compositions(std::size_t creases) const;
};

/// All canonical assignments attaining the maximum count, sorted. With a
/// filter only accepted assignments are considered and the face limit is
/// raised by kRestrictedHeadroom.
std::vector<SearchRecord> max_search(std::size_t faces, const std::optional<RestrictionFilter>& filter,
                                     const SweepOptions& options = {});

/// e^m / sqrt(2 pi m) * k^m
double equal_blocks_growth(std::size_t m, std::size_t k);

struct SeriesRow {
  std::size_t k = 0;
  std::size_t faces = 0;
  std::optional<FoldCount> count;  // empty when out of reach
  double ratio = 0.0;              // count / equal_blocks_growth(m, k)
  std::string error;
};

/// c(S(m, k)) for k = 1..k_max, S(m, k) having m blocks of size k. Rows
/// whose strip exceeds `reach_faces` carry an error instead of a count.
std::vector<SeriesRow> equal_blocks_series(std::size_t m, std::size_t k_max,
                                           std::size_t reach_faces = kDefaultSeriesReach);

/// 2^n / n^(5/4)
double max_fold_curve(double n);

/// One "<n> <count>" line per distinct (n, count) pair, first-seen order.
std::string emit_scatter(std::span<const SearchRecord> records);
/// "<n> <value>" samples of max_fold_curve for every integer n spanned by
/// the records, printed with 6 significant digits.
std::string emit_curve(std::span<const SearchRecord> records);

}  // namespace mvfold
