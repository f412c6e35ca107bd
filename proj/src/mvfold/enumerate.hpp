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

#include <cstddef>
#include <functional>

#include "mvfold/core.hpp"
#include "mvfold/fold_count.hpp"

namespace mvfold {

inline constexpr std::size_t kDefaultOracleLimit = 10;

/// Counts valid orderings by testing all n! permutations. Refuses strips
/// with more than `face_limit` faces.
FoldCount count_oracle(const MvAssignment& mu, std::size_t face_limit = kDefaultOracleLimit);

/// Receives each folding; return false to stop the enumeration.
using FoldingVisitor = std::function<bool(LayerOrdering)>;

/// Builds foldings face by face: face i is inserted into every gap of the
/// stack that satisfies crease i-1's MV relation and whose new arc crosses
/// no arc already on the same side. Gaps are tried left to right, so the
/// visit order is deterministic. Returns the number of foldings visited.
FoldCount enumerate_foldings(const MvAssignment& mu, const FoldingVisitor& visitor);

/// Same search as enumerate_foldings without materializing orderings.
FoldCount count_fast(const MvAssignment& mu);

/// Checks the structure every 2-alternating folding has after each block:
/// among bottom arcs enclosed by no other bottom arc, mountains all lie left
/// of valleys, and the last face placed is the left end of the leftmost such
/// valley (prefix ends in V) or the right end of the rightmost such mountain
/// (ends in M). Invalid orderings yield false. Throws Error(Domain) when mu
/// is not 2-alternating.
bool verify_lemma_structure(const MvAssignment& mu, const LayerOrdering& ordering);

}  // namespace mvfold
