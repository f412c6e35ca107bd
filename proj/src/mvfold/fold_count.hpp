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

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mvfold/error.hpp"

namespace mvfold {

/// Nonnegative 128-bit count. Every arithmetic operation is checked and
/// throws Error(Overflow) instead of wrapping.
class FoldCount {
 public:
  using value_type = unsigned __int128;

  constexpr FoldCount() = default;
  constexpr FoldCount(std::uint64_t v) : value_(v) {}  // NOLINT(implicit)

  static constexpr FoldCount from_raw(value_type v) {
    FoldCount c;
    c.value_ = v;
    return c;
  }

  constexpr value_type raw() const { return value_; }

  /// Narrowing accessor; throws Error(Overflow) if the value needs more
  /// than 64 bits.
  std::uint64_t to_u64() const {
    if (value_ >> 64) throw Error(ErrorCode::Overflow, "count exceeds 64 bits");
    return static_cast<std::uint64_t>(value_);
  }

  double to_double() const { return static_cast<double>(value_); }

  FoldCount& operator+=(FoldCount rhs) {
    value_type sum = value_ + rhs.value_;
    if (sum < value_) throw Error(ErrorCode::Overflow, "count addition overflowed 128 bits");
    value_ = sum;
    return *this;
  }

  FoldCount& operator*=(FoldCount rhs) {
    if (value_ != 0 && rhs.value_ > kMax / value_)
      throw Error(ErrorCode::Overflow, "count multiplication overflowed 128 bits");
    value_ *= rhs.value_;
    return *this;
  }

  FoldCount& operator++() { return *this += FoldCount(1); }

  friend FoldCount operator+(FoldCount a, FoldCount b) { return a += b; }
  friend FoldCount operator*(FoldCount a, FoldCount b) { return a *= b; }

  friend constexpr bool operator==(FoldCount a, FoldCount b) = default;
  friend constexpr std::strong_ordering operator<=>(FoldCount a, FoldCount b) {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    if (value_ == 0) return "0";
    std::string out;
    for (value_type v = value_; v != 0; v /= 10) out.push_back(static_cast<char>('0' + v % 10));
    return {out.rbegin(), out.rend()};
  }

  /// Parses a nonempty run of decimal digits.
  static FoldCount parse(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::Parse, "empty count");
    FoldCount c;
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw Error(ErrorCode::Parse, "count is not a decimal integer: '" + std::string(text) + "'");
      c *= FoldCount(10);
      c += FoldCount(static_cast<std::uint64_t>(ch - '0'));
    }
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, FoldCount c) { return os << c.to_string(); }

 private:
  static constexpr value_type kMax = ~value_type{0};
  value_type value_ = 0;
};

}  // namespace mvfold
