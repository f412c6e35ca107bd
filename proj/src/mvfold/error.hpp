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

#include <stdexcept>
#include <string>

namespace mvfold {

enum class ErrorCode {
  Parse,            // malformed assignment text or record line
  Domain,           // argument outside the operation's precondition
  InvalidOrdering,  // layer ordering is not a permutation or not valid
  Limit,            // size guard (oracle / sweep limit) exceeded
  Overflow,         // checked count arithmetic overflowed
};

const char* to_string(ErrorCode code) noexcept;

/// All library failures are reported as this exception; the C API maps
/// `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mvfold
