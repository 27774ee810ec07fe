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

#include "evaluate/evaluate.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "common/error.h"

namespace divtcp::evaluate {
namespace {

std::unordered_map<std::string_view, std::size_t> Positions(std::span<const std::string> order) {
  std::unordered_map<std::string_view, std::size_t> at;
  at.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) at.emplace(order[i], i + 1);
  return at;
}

void RequireSamples(std::size_t nx, std::size_t ny) {
  if (nx == 0 || ny == 0) throw Error(ErrorCode::kEmptySample, "both samples need at least one value");
}

}  // namespace

ApfdResult Apfd(std::span<const std::string> order, const KillMap& kills) {
  const auto at = Positions(order);
  ApfdResult out;
  out.n = order.size();
  std::uint64_t sum = 0;
  for (const auto& mutant : kills) {
    std::size_t first = 0;
    for (const auto& test : mutant.members) {
      auto it = at.find(test);
      if (it == at.end()) {
        throw Error(ErrorCode::kUnknownTestId,
                    "mutant " + mutant.id + " is killed by " + test + ", which is not in the order");
      }
      if (first == 0 || it->second < first) first = it->second;
    }
    if (first == 0) {
      ++out.unkillable;
      continue;
    }
    ++out.m;
    sum += first;
  }
  if (out.m == 0) throw Error(ErrorCode::kNoKillableFaults, "no mutant is killed by any test");
  const double n = static_cast<double>(out.n);
  const double m = static_cast<double>(out.m);
  out.apfd = 1.0 - static_cast<double>(sum) / (n * m) + 1.0 / (2.0 * n);
  return out;
}

std::vector<FaultPosition> FirstFaultPositions(std::span<const std::string> order,
                                               const FaultRevealMap& faults) {
  const auto at = Positions(order);
  std::vector<FaultPosition> out;
  out.reserve(faults.size());
  for (const auto& fault : faults) {
    FaultPosition fp{fault.id, std::nullopt};
    for (const auto& test : fault.members) {
      auto it = at.find(test);
      if (it != at.end() && (!fp.position || it->second < *fp.position)) fp.position = it->second;
    }
    out.push_back(std::move(fp));
  }
  return out;
}

double A12(std::span<const double> x, std::span<const double> y) {
  RequireSamples(x.size(), y.size());
  double wins = 0;
  for (double a : x) {
    for (double b : y) wins += a > b ? 1.0 : a == b ? 0.5 : 0.0;
  }
  return wins / (static_cast<double>(x.size()) * static_cast<double>(y.size()));
}

MannWhitneyResult MannWhitneyU(std::span<const double> x, std::span<const double> y) {
  RequireSamples(x.size(), y.size());
  const std::size_t n1 = x.size();
  const std::size_t n2 = y.size();
  const std::size_t total = n1 + n2;

  std::vector<std::pair<double, bool>> pooled;  // value, from x
  pooled.reserve(total);
  for (double v : x) pooled.emplace_back(v, true);
  for (double v : y) pooled.emplace_back(v, false);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  double rank_sum_x = 0;
  double tie_term = 0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    while (j < total && pooled[j].first == pooled[i].first) ++j;
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].second) rank_sum_x += midrank;
    }
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  MannWhitneyResult out;
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  const double nn = static_cast<double>(total);
  out.u = rank_sum_x - a * (a + 1.0) / 2.0;
  const double mean = a * b / 2.0;
  const double variance = total > 1 ? a * b / 12.0 * ((nn + 1.0) - tie_term / (nn * (nn - 1.0))) : 0.0;
  if (variance <= 0) {
    out.degenerate = true;
    return out;
  }
  const double deviation = std::max(0.0, std::fabs(out.u - mean) - 0.5);
  out.z = deviation / std::sqrt(variance);
  out.p = std::min(1.0, std::erfc(out.z / std::sqrt(2.0)));
  return out;
}

double Median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptySample, "median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

std::string_view ProjectOf(std::string_view fault_id) {
  return fault_id.substr(0, fault_id.find('-'));
}

PositionMedians SummarisePositions(const std::vector<FaultPosition>& positions) {
  PositionMedians out;
  std::vector<double> all;
  std::map<std::string_view, std::vector<double>> by_project;
  for (const auto& fp : positions) {
    if (!fp.position) {
      ++out.undetected;
      continue;
    }
    ++out.detected;
    all.push_back(static_cast<double>(*fp.position));
    by_project[ProjectOf(fp.fault_id)].push_back(static_cast<double>(*fp.position));
  }
  if (all.empty()) return out;
  out.flat = Median(all);
  std::vector<double> project_medians;
  for (auto& [project, values] : by_project) project_medians.push_back(Median(values));
  out.per_project = Median(project_medians);
  return out;
}

}  // namespace divtcp::evaluate
