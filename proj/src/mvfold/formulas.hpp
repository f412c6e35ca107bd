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

// Closed forms for c(mu) and the walk-counting machinery behind the
// 2-alternating product formula.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mvfold/core.hpp"
#include "mvfold/fold_count.hpp"

namespace mvfold {

/// Catalan numbers with C_0 = C_1 = 1, C_2 = 2, C_3 = 5. k >= 1.
FoldCount catalan(std::size_t k);

/// Row r of Catalan's triangle (r + 1 entries, r >= 1): [1,1], [1,2,2],
/// [1,3,5,5], ... Row r sums to catalan(r + 1).
std::vector<FoldCount> triangle_row(std::size_t r);

/// c(M^n) for n >= 1 creases.
FoldCount uniform(std::size_t creases);

/// c(M^a V^b), a >= 1, b >= 0. The arguments are swapped when b > a.
FoldCount two_block(std::size_t a, std::size_t b);

/// c of the 2-alternating assignment with m >= 1 blocks:
/// C(floor(m/2)+1) * C(ceil(m/2)+1).
FoldCount two_alternating(std::size_t blocks);

/// Dense matrix of counts, stored row-major and 0-based.
class CountMatrix {
 public:
  CountMatrix() = default;
  CountMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FoldCount& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FoldCount operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FoldCount sum() const;
  CountMatrix transposed() const;
  CountMatrix operator*(const CountMatrix& rhs) const;

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FoldCount> data_;
};

/// One-step transfer matrix A(m): (floor((m+2)/2) + 1) x floor((m+2)/2),
/// an all-ones upper triangle with an extra row of ones on top.
CountMatrix step_matrix(std::size_t m);

/// Walk counts X(m). Walks start at (2, 1) and step (a, b) -> (b + 1, i)
/// for 1 <= i <= a. Logical row index a starts at 2 and logical column
/// index b at 1; storage is 0-based, so stored (r, c) is walk end
/// (r + 2, c + 1). Use `ending_at` for logical access.
class WalkMatrix {
 public:
  static constexpr std::size_t kRowOffset = 2;
  static constexpr std::size_t kColOffset = 1;

  WalkMatrix(std::size_t m, CountMatrix entries) : m_(m), entries_(std::move(entries)) {}

  std::size_t steps() const { return m_; }
  const CountMatrix& entries() const { return entries_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }

  /// Number of walks of length m that end at (a, b); 0 outside the matrix.
  FoldCount ending_at(std::size_t a, std::size_t b) const;
  FoldCount stored(std::size_t r, std::size_t c) const { return entries_(r, c); }
  FoldCount total() const { return entries_.sum(); }

 private:
  std::size_t m_;
  CountMatrix entries_;
};

/// X(m) for m >= 2 from X(2) = ones(2, 2) via X(k+1) = (A(k) X(k))^T.
WalkMatrix walk_matrix(std::size_t m);

/// Number of length-m walks, by dynamic programming over end states.
FoldCount walk_count_dp(std::size_t m);

struct Bounds {
  FoldCount lower;
  FoldCount upper;
};

/// lower = a1 * prod_{i>=2} min(a_{i-1} + 1, a_i)
/// upper = a1 * prod_{i>=2} (a_i + sum_{j<i} 2 a_j)
/// The one-face strip (no blocks) gives (1, 1).
Bounds bounds(const BlockSpec& blocks);

}  // namespace mvfold
