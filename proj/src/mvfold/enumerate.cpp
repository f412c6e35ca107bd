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

#include "mvfold/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "mvfold/error.hpp"

namespace mvfold {

FoldCount count_oracle(const MvAssignment& mu, std::size_t face_limit) {
  if (mu.faces() > face_limit)
    throw Error(ErrorCode::Limit, "oracle refuses " + std::to_string(mu.faces()) + " faces (limit " +
                                      std::to_string(face_limit) + ")");
  std::vector<std::size_t> perm(mu.faces());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  FoldCount count;
  do {
    if (is_valid(mu, LayerOrdering(perm))) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

// Partial folding of faces 0..depth-1 plus per-depth scratch. `on_leaf`
// returns false to abort the search.
template <class OnLeaf>
class GapInsertion {
 public:
  GapInsertion(const MvAssignment& mu, OnLeaf on_leaf)
      : mu_(mu), n_(mu.faces()), on_leaf_(std::move(on_leaf)), pos_(n_, 0), diff_(n_ + 2, 0), slots_(n_) {
    stack_.reserve(n_);
    relation_.reserve(mu.creases());
    for (std::size_t i = 0; i < mu.creases(); ++i) relation_.push_back(mv_constraint(mu, i));
  }

  FoldCount run() {
    stack_.push_back(0);
    pos_[0] = 0;
    extend(1);
    return count_;
  }

 private:
  // Returns false once the visitor asked to stop.
  bool extend(std::size_t face) {
    if (face == n_) {
      ++count_;
      return on_leaf_(stack_);
    }
    std::vector<std::size_t>& slots = slots_[face];
    legal_gaps(face, slots);
    for (std::size_t gap : slots) {
      stack_.insert(stack_.begin() + static_cast<std::ptrdiff_t>(gap), face);
      renumber(gap);
      bool keep_going = extend(face + 1);
      stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(gap));
      renumber(gap);
      if (!keep_going) return false;
    }
    return true;
  }

  void renumber(std::size_t from) {
    for (std::size_t q = from; q < stack_.size(); ++q) pos_[stack_[q]] = q;
  }

  // Gap g sits just before stack position g (g == face means the far right).
  // A gap is legal for the new arc (face-1, face) iff it lies inside exactly
  // the same-side arcs that contain face-1. Same-side arcs are laminar, so
  // that means: inside the innermost arc around face-1 and inside no other.
  void legal_gaps(std::size_t face, std::vector<std::size_t>& slots) {
    slots.clear();
    const std::size_t anchor = pos_[face - 1];
    const bool goes_left = relation_[face - 1] == Relation::Greater;
    std::fill(diff_.begin(), diff_.begin() + static_cast<std::ptrdiff_t>(face + 2), 0);

    std::size_t around_anchor = 0;
    std::size_t inner_lo = 0;
    std::size_t inner_hi = face;
    for (std::size_t j = (face - 1) % 2; j + 2 < face; j += 2) {
      std::size_t lo = std::min(pos_[j], pos_[j + 1]);
      std::size_t hi = std::max(pos_[j], pos_[j + 1]);
      ++diff_[lo + 1];
      --diff_[hi + 1];
      if (lo < anchor && anchor < hi) {
        if (around_anchor == 0 || lo > inner_lo) {
          inner_lo = lo;
          inner_hi = hi;
        }
        ++around_anchor;
      }
    }

    const std::size_t first = goes_left ? 0 : anchor + 1;
    const std::size_t last = goes_left ? anchor : face;
    int depth = 0;
    for (std::size_t g = 0; g <= last; ++g) {
      depth += diff_[g];
      if (g < first) continue;
      if (static_cast<std::size_t>(depth) != around_anchor) continue;
      if (around_anchor != 0 && !(inner_lo < g && g <= inner_hi)) continue;
      slots.push_back(g);
    }
  }

  const MvAssignment& mu_;
  std::size_t n_;
  OnLeaf on_leaf_;
  std::vector<Relation> relation_;
  std::vector<std::size_t> stack_;
  std::vector<std::size_t> pos_;
  std::vector<int> diff_;
  std::vector<std::vector<std::size_t>> slots_;
  FoldCount count_;
};

template <class OnLeaf>
GapInsertion(const MvAssignment&, OnLeaf) -> GapInsertion<OnLeaf>;

}  // namespace

FoldCount enumerate_foldings(const MvAssignment& mu, const FoldingVisitor& visitor) {
  GapInsertion search(mu, [&visitor](const std::vector<std::size_t>& stack) {
    return visitor(LayerOrdering(stack));
  });
  return search.run();
}

FoldCount count_fast(const MvAssignment& mu) {
  GapInsertion search(mu, [](const std::vector<std::size_t>&) { return true; });
  return search.run();
}

namespace {

// Conditions on one complete prefix; `mu` and `ordering` cover the same faces.
bool outer_arcs_well_placed(const MvAssignment& mu, const LayerOrdering& ordering) {
  std::vector<Arc> bottom;
  for (const Arc& a : arcs_of(mu, ordering))
    if (a.side == Side::Bottom) bottom.push_back(a);
  std::vector<Arc> mountains;
  std::vector<Arc> valleys;
  for (const Arc& a : bottom) {
    bool enclosed = std::any_of(bottom.begin(), bottom.end(),
                                [&](const Arc& o) { return o.lo < a.lo && a.hi < o.hi; });
    if (!enclosed) (a.dir == CreaseDir::Mountain ? mountains : valleys).push_back(a);
  }
  for (const Arc& m : mountains)
    for (const Arc& v : valleys)
      if (m.hi >= v.lo) return false;

  const std::size_t last = ordering.position_of(mu.faces() - 1);
  if (mu[mu.creases() - 1] == CreaseDir::Valley) {
    auto leftmost = std::min_element(valleys.begin(), valleys.end(),
                                     [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
    return leftmost != valleys.end() && leftmost->lo == last;
  }
  auto rightmost = std::max_element(mountains.begin(), mountains.end(),
                                    [](const Arc& a, const Arc& b) { return a.hi < b.hi; });
  return rightmost != mountains.end() && rightmost->hi == last;
}

}  // namespace

bool verify_lemma_structure(const MvAssignment& mu, const LayerOrdering& ordering) {
  if (!is_two_alternating(mu))
    throw Error(ErrorCode::Domain, "'" + mu.str() + "' is not a 2-alternating assignment");
  if (ordering.size() != mu.faces() || !is_valid(mu, ordering)) return false;

  const std::size_t blocks = mu.creases() / 2;
  for (std::size_t t = 1; t <= blocks; ++t) {
    const std::size_t faces = 2 * t + 1;
    std::vector<std::size_t> kept;
    for (std::size_t f : ordering.faces())
      if (f < faces) kept.push_back(f);
    if (!outer_arcs_well_placed(two_alternating_assignment(t), LayerOrdering(std::move(kept)))) return false;
  }
  return true;
}

}  // namespace mvfold
