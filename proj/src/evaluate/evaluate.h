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

#ifndef DIVTCP_EVALUATE_EVALUATE_H_
#define DIVTCP_EVALUATE_EVALUATE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "common/io.h"

namespace divtcp::evaluate {

// Mutant (or fault) id to the tests that kill (reveal) it.
using KillMap = std::vector<IdSetRow>;
using FaultRevealMap = std::vector<IdSetRow>;

struct ApfdResult {
  double apfd = 0;
  std::size_t n = 0;           // tests in the order
  std::size_t m = 0;           // killable mutants
  std::size_t unkillable = 0;  // mutants with no killer, left out of m
};

// 1 - sum(TF_i) / (n m) + 1 / (2n), TF_i the 1-based position of the first
// killer of mutant i. Throws Error(kUnknownTestId) for a killer missing from
// the order and Error(kNoKillableFaults) when m would be 0.
ApfdResult Apfd(std::span<const std::string> order, const KillMap& kills);

struct FaultPosition {
  std::string fault_id;
  std::optional<std::size_t> position;  // 1-based; empty when undetected
};

// Revealing tests outside the order are ignored.
std::vector<FaultPosition> FirstFaultPositions(std::span<const std::string> order,
                                               const FaultRevealMap& faults);

// P(X > Y) + 0.5 P(X = Y) over all pairs. Throws Error(kEmptySample).
double A12(std::span<const double> x, std::span<const double> y);

struct MannWhitneyResult {
  double u = 0;  // U for x
  double z = 0;
  double p = 1;  // two-sided
  bool degenerate = false;  // every value identical: no variance, p = 1
};

// Midranks for ties; normal approximation with tie correction and a 0.5
// continuity correction. Throws Error(kEmptySample).
MannWhitneyResult MannWhitneyU(std::span<const double> x, std::span<const double> y);

// Throws Error(kEmptySample).
double Median(std::vector<double> values);

// Project of a fault id: the text before its first '-' ("Lang-12" -> "Lang").
std::string_view ProjectOf(std::string_view fault_id);

struct PositionMedians {
  std::optional<double> flat;         // over all detected faults
  std::optional<double> per_project;  // median of each project's median
  std::size_t detected = 0;
  std::size_t undetected = 0;
};
PositionMedians SummarisePositions(const std::vector<FaultPosition>& positions);

}  // namespace divtcp::evaluate

#endif  // DIVTCP_EVALUATE_EVALUATE_H_
