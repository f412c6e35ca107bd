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

#include "mvfold/render.hpp"

#include <algorithm>
#include <sstream>

#include "mvfold/error.hpp"

namespace mvfold {

namespace {

bool strictly_contains(const SceneArc& outer, const SceneArc& inner) {
  return outer.lo < inner.lo && inner.hi < outer.hi;
}

}  // namespace

MeanderScene build_scene(const MvAssignment& mu, const LayerOrdering& ordering) {
  if (ordering.size() != mu.faces() || !is_valid(mu, ordering))
    throw Error(ErrorCode::InvalidOrdering, "cannot render an invalid folding of '" + mu.str() + "'");
  MeanderScene scene;
  scene.labels.assign(ordering.faces().begin(), ordering.faces().end());
  for (const Arc& a : arcs_of(mu, ordering)) {
    scene.arcs.push_back(SceneArc{a.crease, a.side, a.dir == CreaseDir::Mountain ? ArcStyle::Solid : ArcStyle::Dashed,
                                  a.lo, a.hi, 0, 1});
  }
  for (SceneArc& a : scene.arcs)
    for (const SceneArc& b : scene.arcs)
      if (b.side == a.side && strictly_contains(b, a)) ++a.depth;
  // Heights grow with span, so processing narrow arcs first is enough.
  std::vector<SceneArc*> by_span;
  for (SceneArc& a : scene.arcs) by_span.push_back(&a);
  std::stable_sort(by_span.begin(), by_span.end(),
                   [](const SceneArc* x, const SceneArc* y) { return x->hi - x->lo < y->hi - y->lo; });
  for (SceneArc* a : by_span)
    for (const SceneArc* b : by_span)
      if (b->side == a->side && strictly_contains(*a, *b)) a->height = std::max(a->height, b->height + 1);
  return scene;
}

std::string to_svg(const MeanderScene& scene) {
  constexpr long kSpacing = 40;
  constexpr long kMargin = 20;
  constexpr long kLabelGap = 16;

  const long n = static_cast<long>(scene.labels.size());
  long top = 0;
  long bottom = 0;
  for (const SceneArc& a : scene.arcs) {
    long r = static_cast<long>(a.hi - a.lo) * kSpacing / 2;
    (a.side == Side::Top ? top : bottom) = std::max(a.side == Side::Top ? top : bottom, r);
  }
  const long width = 2 * kMargin + (n - 1) * kSpacing;
  const long height = 2 * kMargin + top + std::max(bottom, kLabelGap);
  const long baseline = kMargin + top;
  auto x_of = [&](std::size_t pos) { return kMargin + static_cast<long>(pos) * kSpacing; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<!-- faces left to right:";
  for (std::size_t f : scene.labels) out << ' ' << f;
  out << " -->\n";
  if (n > 1)
    out << "<line x1=\"" << x_of(0) << "\" y1=\"" << baseline << "\" x2=\"" << x_of(scene.labels.size() - 1)
        << "\" y2=\"" << baseline << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const SceneArc& a : scene.arcs) {
    long r = static_cast<long>(a.hi - a.lo) * kSpacing / 2;
    int sweep = a.side == Side::Top ? 1 : 0;
    out << "<path d=\"M " << x_of(a.lo) << " " << baseline << " A " << r << " " << r << " 0 0 " << sweep << " "
        << x_of(a.hi) << " " << baseline << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"";
    if (a.style == ArcStyle::Dashed) out << " stroke-dasharray=\"6,4\"";
    out << "/>\n";
  }
  for (std::size_t p = 0; p < scene.labels.size(); ++p) {
    out << "<line x1=\"" << x_of(p) << "\" y1=\"" << baseline - 4 << "\" x2=\"" << x_of(p) << "\" y2=\""
        << baseline + 4 << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << x_of(p) << "\" y=\"" << baseline + kLabelGap
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" << scene.labels[p]
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string to_ascii(const MeanderScene& scene) {
  std::size_t label_width = 1;
  for (std::size_t f : scene.labels) label_width = std::max(label_width, std::to_string(f).size());
  const std::size_t cell = std::max<std::size_t>(3, label_width + 1);
  const std::size_t columns = (scene.labels.size() - 1) * cell + label_width;

  std::size_t top_rows = 0;
  std::size_t bottom_rows = 0;
  for (const SceneArc& a : scene.arcs) (a.side == Side::Top ? top_rows : bottom_rows) =
      std::max(a.side == Side::Top ? top_rows : bottom_rows, a.height);

  using Row = std::vector<std::string>;
  std::vector<Row> upper(top_rows, Row(columns, " "));
  std::vector<Row> lower(bottom_rows, Row(columns, " "));
  for (const SceneArc& a : scene.arcs) {
    const bool dashed = a.style == ArcStyle::Dashed;
    const std::string horizontal = dashed ? "┄" : "─";
    const std::string vertical = dashed ? "┆" : "│";
    const std::size_t left = a.lo * cell;
    const std::size_t right = a.hi * cell;
    if (a.side == Side::Top) {
      std::size_t corner = top_rows - a.height;
      upper[corner][left] = "╭";
      upper[corner][right] = "╮";
      for (std::size_t c = left + 1; c < right; ++c) upper[corner][c] = horizontal;
      for (std::size_t r = corner + 1; r < top_rows; ++r) upper[r][left] = upper[r][right] = vertical;
    } else {
      std::size_t corner = a.height - 1;
      lower[corner][left] = "╰";
      lower[corner][right] = "╯";
      for (std::size_t c = left + 1; c < right; ++c) lower[corner][c] = horizontal;
      for (std::size_t r = 0; r < corner; ++r) lower[r][left] = lower[r][right] = vertical;
    }
  }

  auto flush = [](const Row& row) {
    std::size_t end = row.size();
    while (end > 0 && row[end - 1] == " ") --end;
    std::string line;
    for (std::size_t c = 0; c < end; ++c) line += row[c];
    return line + "\n";
  };

  std::string out;
  for (const Row& row : upper) out += flush(row);
  Row labels(columns, " ");
  for (std::size_t p = 0; p < scene.labels.size(); ++p) {
    std::string text = std::to_string(scene.labels[p]);
    for (std::size_t i = 0; i < text.size(); ++i) labels[p * cell + i] = std::string(1, text[i]);
  }
  out += flush(labels);
  for (const Row& row : lower) out += flush(row);
  return out;
}

}  // namespace mvfold
