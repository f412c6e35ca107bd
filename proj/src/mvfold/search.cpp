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

#include "mvfold/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <numbers>
#include <set>
#include <thread>

#include <json.hpp>

#include "mvfold/enumerate.hpp"
#include "mvfold/error.hpp"

namespace mvfold {

namespace {

unsigned worker_count(unsigned requested, std::size_t items) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(items, 1)));
}

void check_faces(std::size_t faces, std::size_t limit, const char* what) {
  if (faces < 2) throw Error(ErrorCode::Domain, std::string(what) + " needs at least 2 faces");
  if (faces > limit)
    throw Error(ErrorCode::Limit, std::string(what) + ": " + std::to_string(faces) + " faces exceeds the sweep limit " +
                                      std::to_string(limit) + " (set MVFOLD_SWEEP_LIMIT to override)");
  if (faces - 1 >= 63) throw Error(ErrorCode::Limit, "sweeps support at most 63 creases");
}

// Canonical orbit representatives with their orbit sizes, or every
// assignment with weight 1.
std::vector<std::pair<MvAssignment, std::size_t>> sweep_members(std::size_t faces, bool use_symmetry) {
  const std::size_t creases = faces - 1;
  std::vector<std::pair<MvAssignment, std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << creases); ++mask) {
    MvAssignment mu = from_mask(mask, creases);
    if (!use_symmetry) {
      out.emplace_back(std::move(mu), 1);
    } else if (canonical(mu) == mu) {
      std::size_t weight = orbit_size(mu);
      out.emplace_back(std::move(mu), weight);
    }
  }
  return out;
}

}  // namespace

std::vector<FoldCount> count_all(std::span<const MvAssignment> assignments, unsigned threads) {
  std::vector<FoldCount> counts(assignments.size());
  const unsigned workers = worker_count(threads, assignments.size());
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < assignments.size(); i += workers) counts[i] = count_fast(assignments[i]);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return counts;
}

FoldCount total_foldings(std::size_t faces, const SweepOptions& options) {
  check_faces(faces, options.limit, "total_foldings");
  auto members = sweep_members(faces, options.use_symmetry);
  std::vector<MvAssignment> assignments;
  assignments.reserve(members.size());
  for (const auto& m : members) assignments.push_back(m.first);
  auto counts = count_all(assignments, options.threads);
  FoldCount total;
  for (std::size_t i = 0; i < counts.size(); ++i)
    total += counts[i] * FoldCount(static_cast<std::uint64_t>(members[i].second));
  return total;
}

std::string SearchRecord::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["assignment"] = assignment.str();
  j["count"] = count.to_string();
  return j.dump();
}

SearchRecord SearchRecord::from_json(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed record: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("assignment") || !j.contains("count") ||
      !j["n"].is_number_unsigned() || !j["assignment"].is_string() || !j["count"].is_string())
    throw Error(ErrorCode::Parse, "record needs unsigned \"n\", string \"assignment\" and string \"count\"");
  SearchRecord r;
  r.n = j["n"].get<std::size_t>();
  r.assignment = parse_assignment(j["assignment"].get<std::string>());
  r.count = FoldCount::parse(j["count"].get<std::string>());
  if (r.assignment.faces() != r.n)
    throw Error(ErrorCode::Parse, "record n=" + std::to_string(r.n) + " does not match assignment '" +
                                      r.assignment.str() + "'");
  if (canonical(r.assignment) != r.assignment)
    throw Error(ErrorCode::Parse, "record assignment '" + r.assignment.str() + "' is not canonical");
  return r;
}

std::string to_jsonl(std::span<const SearchRecord> records) {
  std::string out;
  for (const auto& r : records) {
    out += r.to_json();
    out.push_back('\n');
  }
  return out;
}

std::vector<SearchRecord> parse_jsonl(std::string_view text) {
  std::vector<SearchRecord> out;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.push_back(SearchRecord::from_json(line));
  }
  return out;
}

RestrictionFilter RestrictionFilter::conjecture() { return {{1, 2, 3}, {{3, 3}}}; }

bool RestrictionFilter::accepts(const BlockSpec& blocks) const {
  for (std::size_t i = 0; i < blocks.sizes.size(); ++i) {
    if (std::find(allowed_sizes.begin(), allowed_sizes.end(), blocks.sizes[i]) == allowed_sizes.end()) return false;
    if (i > 0) {
      std::pair<std::size_t, std::size_t> adj{blocks.sizes[i - 1], blocks.sizes[i]};
      if (std::find(forbidden_adjacent.begin(), forbidden_adjacent.end(), adj) != forbidden_adjacent.end())
        return false;
    }
  }
  return true;
}

std::vector<BlockSpec> RestrictionFilter::compositions(std::size_t creases) const {
  std::vector<BlockSpec> out;
  std::vector<std::size_t> sizes;
  auto forbidden = [&](std::size_t prev, std::size_t next) {
    return std::find(forbidden_adjacent.begin(), forbidden_adjacent.end(), std::pair{prev, next}) !=
           forbidden_adjacent.end();
  };
  auto grow = [&](auto& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (!sizes.empty()) out.push_back(BlockSpec{CreaseDir::Mountain, sizes});
      return;
    }
    for (std::size_t s : allowed_sizes) {
      if (s == 0 || s > remaining) continue;
      if (!sizes.empty() && forbidden(sizes.back(), s)) continue;
      sizes.push_back(s);
      self(self, remaining - s);
      sizes.pop_back();
    }
  };
  grow(grow, creases);
  return out;
}

std::vector<SearchRecord> max_search(std::size_t faces, const std::optional<RestrictionFilter>& filter,
                                     const SweepOptions& options) {
  std::vector<MvAssignment> candidates;
  if (filter) {
    check_faces(faces, options.limit + kRestrictedHeadroom, "restricted max_search");
    std::set<std::string> seen;
    for (const BlockSpec& blocks : filter->compositions(faces - 1)) {
      MvAssignment mu = canonical(blocks.expand());
      if (seen.insert(mu.str()).second) candidates.push_back(std::move(mu));
    }
  } else {
    check_faces(faces, options.limit, "max_search");
    for (auto& [mu, weight] : sweep_members(faces, options.use_symmetry)) candidates.push_back(std::move(mu));
  }
  if (candidates.empty()) return {};

  auto counts = count_all(candidates, options.threads);
  FoldCount best = *std::max_element(counts.begin(), counts.end());
  std::map<std::string, SearchRecord> winners;  // keyed by canonical string
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (counts[i] != best) continue;
    MvAssignment mu = canonical(candidates[i]);
    std::string key = mu.str();
    winners.try_emplace(std::move(key), SearchRecord{faces, std::move(mu), best});
  }
  std::vector<SearchRecord> out;
  out.reserve(winners.size());
  for (auto& [key, record] : winners) out.push_back(std::move(record));
  return out;
}

double equal_blocks_growth(std::size_t m, std::size_t k) {
  const double md = static_cast<double>(m);
  return std::exp(md) / std::sqrt(2.0 * std::numbers::pi * md) * std::pow(static_cast<double>(k), md);
}

std::vector<SeriesRow> equal_blocks_series(std::size_t m, std::size_t k_max, std::size_t reach_faces) {
  if (m < 1) throw Error(ErrorCode::Domain, "equal_blocks_series needs m >= 1");
  std::vector<SeriesRow> rows;
  for (std::size_t k = 1; k <= k_max; ++k) {
    SeriesRow row;
    row.k = k;
    row.faces = m * k + 1;
    if (row.faces > reach_faces) {
      row.error = "S(" + std::to_string(m) + "," + std::to_string(k) + ") has " + std::to_string(row.faces) +
                  " faces, beyond the enumeration reach of " + std::to_string(reach_faces);
    } else {
      try {
        FoldCount c = count_fast(BlockSpec{CreaseDir::Mountain, std::vector<std::size_t>(m, k)}.expand());
        row.count = c;
        row.ratio = c.to_double() / equal_blocks_growth(m, k);
      } catch (const Error& e) {
        row.error = e.what();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double max_fold_curve(double n) { return std::pow(2.0, n) / std::pow(n, 1.25); }

std::string emit_scatter(std::span<const SearchRecord> records) {
  std::string out;
  std::set<std::pair<std::size_t, std::string>> seen;
  for (const auto& r : records) {
    std::string c = r.count.to_string();
    if (!seen.emplace(r.n, c).second) continue;
    out += std::to_string(r.n) + " " + c + "\n";
  }
  return out;
}

std::string emit_curve(std::span<const SearchRecord> records) {
  if (records.empty()) return {};
  auto [lo, hi] = std::minmax_element(records.begin(), records.end(),
                                      [](const SearchRecord& a, const SearchRecord& b) { return a.n < b.n; });
  std::string out;
  char buf[64];
  for (std::size_t n = lo->n; n <= hi->n; ++n) {
    std::snprintf(buf, sizeof buf, "%zu %.6g\n", n, max_fold_curve(static_cast<double>(n)));
    out += buf;
  }
  return out;
}

}  // namespace mvfold
