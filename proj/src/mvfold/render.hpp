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
#include <string>
#include <vector>

#include "mvfold/core.hpp"

namespace mvfold {

enum class ArcStyle { Solid, Dashed };  // mountain, valley

struct SceneArc {
  std::size_t crease = 0;
  Side side = Side::Top;
  ArcStyle style = ArcStyle::Solid;
  std::size_t lo = 0;      // left endpoint position
  std::size_t hi = 0;      // right endpoint position
  std::size_t depth = 0;   // same-side arcs strictly containing this one
  std::size_t height = 1;  // 1 + tallest same-side arc nested inside
};

/// Meander of one folding: points at unit spacing, labeled with the face
/// found at that position, one semicircle per crease.
struct MeanderScene {
  std::vector<std::size_t> labels;  // position -> face
  std::vector<SceneArc> arcs;       // in crease order
};

/// Throws Error(InvalidOrdering) unless the ordering is valid for mu.
MeanderScene build_scene(const MvAssignment& mu, const LayerOrdering& ordering);

std::string to_svg(const MeanderScene& scene);
/// Box-drawing rendering: top arcs above the label row, bottom arcs below,
/// valleys drawn with dashed glyphs.
std::string to_ascii(const MeanderScene& scene);

}  // namespace mvfold
