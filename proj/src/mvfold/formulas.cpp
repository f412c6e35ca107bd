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

#include "mvfold/formulas.hpp"

#include <algorithm>
#include <map>

#include "mvfold/error.hpp"

namespace mvfold {

namespace {

FoldCount count(std::size_t v) { return FoldCount(static_cast<std::uint64_t>(v)); }

}  // namespace

FoldCount catalan(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::Domain, "catalan index must be at least 1");
  // C_{j+1} = C_j * 2(2j+1) / (j+2); the product is always divisible.
  FoldCount c(1);
  for (std::size_t j = 0; j < k; ++j) {
    FoldCount num = c * count(2 * (2 * j + 1));
    c = FoldCount::from_raw(num.raw() / (j + 2));
  }
  return c;
}

std::vector<FoldCount> triangle_row(std::size_t r) {
  if (r < 1) throw Error(ErrorCode::Domain, "Catalan triangle rows start at 1");
  std::vector<FoldCount> row{FoldCount(1)};
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<FoldCount> next;
    next.reserve(k + 1);
    FoldCount running;
    for (std::size_t j = 0; j < k; ++j) {
      running += row[j];
      next.push_back(running);
    }
    next.push_back(running);
    row = std::move(next);
  }
  return row;
}

FoldCount uniform(std::size_t creases) {
  if (creases < 1) throw Error(ErrorCode::Domain, "uniform needs at least one crease");
  return count(creases);
}

FoldCount two_block(std::size_t a, std::size_t b) {
  if (a < b) std::swap(a, b);
  if (a < 1) throw Error(ErrorCode::Domain, "two_block needs a >= 1");
  // Branch order matters: the boundary cases overlap the general formula.
  if (b == 0) return count(a);
  FoldCount A = count(a);
  FoldCount B = count(b);
  if (a == b) return FoldCount::from_raw((count(2) * A * A + count(2)).raw() - (count(3) * A).raw());
  if (a == b + 1) return FoldCount::from_raw((count(2) * B * B + count(1)).raw() - B.raw());
  // a > b + 1, including b = 1.
  return FoldCount::from_raw((A * B + B * B + count(1)).raw() - B.raw());
}

FoldCount two_alternating(std::size_t blocks) {
  if (blocks < 1) throw Error(ErrorCode::Domain, "two_alternating needs at least one block");
  return catalan(blocks / 2 + 1) * catalan((blocks + 1) / 2 + 1);
}

FoldCount CountMatrix::sum() const {
  FoldCount s;
  for (FoldCount v : data_) s += v;
  return s;
}

CountMatrix CountMatrix::transposed() const {
  CountMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CountMatrix CountMatrix::operator*(const CountMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::Domain, "matrix dimension mismatch");
  CountMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      FoldCount left = (*this)(r, k);
      if (left == FoldCount()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += left * rhs(k, c);
    }
  return out;
}

CountMatrix step_matrix(std::size_t m) {
  const std::size_t width = (m + 2) / 2;
  CountMatrix a(width + 1, width);
  for (std::size_t c = 0; c < width; ++c) a(0, c) = FoldCount(1);
  for (std::size_t r = 1; r <= width; ++r)
    for (std::size_t c = r - 1; c < width; ++c) a(r, c) = FoldCount(1);
  return a;
}

FoldCount WalkMatrix::ending_at(std::size_t a, std::size_t b) const {
  if (a < kRowOffset || b < kColOffset) return FoldCount();
  std::size_t r = a - kRowOffset;
  std::size_t c = b - kColOffset;
  if (r >= rows() || c >= cols()) return FoldCount();
  return entries_(r, c);
}

WalkMatrix walk_matrix(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::Domain, "walk_matrix needs m >= 2");
  CountMatrix x(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) x(r, c) = FoldCount(1);
  for (std::size_t k = 2; k < m; ++k) x = (step_matrix(k) * x).transposed();
  return WalkMatrix(m, std::move(x));
}

FoldCount walk_count_dp(std::size_t m) {
  std::map<std::pair<std::size_t, std::size_t>, FoldCount> states{{{2, 1}, FoldCount(1)}};
  for (std::size_t step = 0; step < m; ++step) {
    std::map<std::pair<std::size_t, std::size_t>, FoldCount> next;
    for (const auto& [state, ways] : states) {
      auto [a, b] = state;
      for (std::size_t i = 1; i <= a; ++i) next[{b + 1, i}] += ways;
    }
    states = std::move(next);
  }
  FoldCount total;
  for (const auto& [state, ways] : states) total += ways;
  return total;
}

Bounds bounds(const BlockSpec& blocks) {
  if (blocks.sizes.empty()) return {FoldCount(1), FoldCount(1)};
  const auto& a = blocks.sizes;
  FoldCount lower = count(a[0]);
  FoldCount upper = count(a[0]);
  FoldCount prefix = count(a[0]);  // sum of a_j for j < i
  for (std::size_t i = 1; i < a.size(); ++i) {
    lower *= count(std::min(a[i - 1] + 1, a[i]));
    upper *= count(a[i]) + count(2) * prefix;
    prefix += count(a[i]);
  }
  return {lower, upper};
}

}  // namespace mvfold
