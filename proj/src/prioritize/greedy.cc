// Copyright 2026 The divtcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include "common/error.h"
#include "common/io.h"
#include "common/random.h"
#include "prioritize/prioritize.h"

namespace divtcp::prioritize {
namespace {

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void RequireTests(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "no tests to prioritise");
}

}  // namespace

CoverageMatrix ParseCoverageCsv(std::string_view csv) {
  CoverageMatrix out;
  std::unordered_map<std::string, std::uint32_t> interned;
  for (auto& row : ParseIdSetCsv(csv, "coverage")) {
    std::vector<std::uint32_t> set;
    set.reserve(row.members.size());
    for (auto& entity : row.members) {
      auto [it, fresh] = interned.emplace(std::move(entity), static_cast<std::uint32_t>(interned.size()));
      set.push_back(it->second);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    out.ids.push_back(std::move(row.id));
    out.entities.push_back(std::move(set));
  }
  out.entity_count = interned.size();
  return out;
}

PrioritizedOrder GreedyTotal(const CoverageMatrix& coverage) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = coverage.ids.size();
  RequireTests(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return coverage.entities[a].size() > coverage.entities[b].size();
  });
  PrioritizedOrder out;
  out.approach = "greedy-total";
  for (auto i : order) out.ids.push_back(coverage.ids[i]);
  out.prioritisation_seconds = SecondsSince(start);
  return out;
}

PrioritizedOrder GreedyAdditional(const CoverageMatrix& coverage) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = coverage.ids.size();
  RequireTests(n);
  std::size_t entity_count = coverage.entity_count;
  for (const auto& set : coverage.entities) {
    if (!set.empty()) entity_count = std::max<std::size_t>(entity_count, set.back() + 1);
  }

  PrioritizedOrder out;
  out.approach = "greedy-additional";
  std::vector<bool> picked(n, false);
  std::vector<bool> covered(entity_count, false);
  std::size_t covered_count = 0;
  while (out.ids.size() < n) {
    std::size_t best = n;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (picked[i]) continue;
      std::size_t gain = 0;
      for (auto e : coverage.entities[i]) gain += covered[e] ? 0 : 1;
      if (best == n || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best_gain == 0 && covered_count > 0) {
      std::fill(covered.begin(), covered.end(), false);
      covered_count = 0;
      continue;
    }
    picked[best] = true;
    for (auto e : coverage.entities[best]) {
      if (!covered[e]) {
        covered[e] = true;
        ++covered_count;
      }
    }
    out.ids.push_back(coverage.ids[best]);
  }
  out.prioritisation_seconds = SecondsSince(start);
  return out;
}

PrioritizedOrder RandomOrder(const std::vector<std::string>& ids, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RequireTests(ids.size());
  std::mt19937_64 rng(seed);
  PrioritizedOrder out;
  out.approach = "random";
  out.ids = ids;
  for (std::size_t i = out.ids.size(); i > 1; --i) {
    std::swap(out.ids[i - 1], out.ids[UniformBelow(rng, i)]);
  }
  out.prioritisation_seconds = SecondsSince(start);
  return out;
}

}  // namespace divtcp::prioritize
