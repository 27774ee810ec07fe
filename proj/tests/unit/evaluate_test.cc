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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "common/error.h"
#include "evaluate/evaluate.h"
#include "oracles.h"

namespace divtcp::evaluate {
namespace {

using testing_oracles::PairCountU;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kInvalidArgument;
}

std::vector<std::string> Order(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

TEST(ApfdTest, WorkedValues) {
  const auto order = Order(5);
  const KillMap kills = {{"m1", {"t1"}}, {"m2", {"t3", "t5"}}};
  const auto r = Apfd(order, kills);
  EXPECT_NEAR(r.apfd, 0.7, 1e-12);
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.m, 2u);
  EXPECT_EQ(r.unkillable, 0u);

  for (std::size_t n : {1u, 2u, 7u, 40u}) {
    const auto o = Order(n);
    const KillMap first = {{"a", {"t1"}}, {"b", {"t1"}}, {"c", {o.front()}}};
    const KillMap last = {{"a", {o.back()}}, {"b", {o.back()}}};
    EXPECT_NEAR(Apfd(o, first).apfd, 1.0 - 1.0 / (2.0 * n), 1e-12);
    EXPECT_NEAR(Apfd(o, last).apfd, 1.0 / (2.0 * n), 1e-12);
  }
}

TEST(ApfdTest, UnkillableMutantsAreExcluded) {
  const KillMap kills = {{"m1", {"t1"}}, {"dead", {}}, {"m2", {"t3"}}};
  const auto r = Apfd(Order(5), kills);
  EXPECT_NEAR(r.apfd, 0.7, 1e-12);
  EXPECT_EQ(r.m, 2u);
  EXPECT_EQ(r.unkillable, 1u);
}

TEST(ApfdTest, Errors) {
  EXPECT_EQ(CodeOf([] { Apfd(Order(3), {{"m", {}}}); }), ErrorCode::kNoKillableFaults);
  EXPECT_EQ(CodeOf([] { Apfd(Order(3), {}); }), ErrorCode::kNoKillableFaults);
  EXPECT_EQ(CodeOf([] { Apfd(Order(3), {{"m", {"t9"}}}); }), ErrorCode::kUnknownTestId);
}

TEST(ApfdTest, BoundsAndMonotonicity) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 20;
    const auto order = Order(n);
    KillMap kills;
    for (std::size_t m = 0; m < 1 + rng() % 8; ++m) {
      kills.push_back({"m" + std::to_string(m), {order[rng() % n]}});
    }
    const double base = Apfd(order, kills).apfd;
    EXPECT_GT(base, 0.0);
    EXPECT_LT(base, 1.0);
    // Move one mutant's killer one step earlier.
    const auto& killer = kills[0].members[0];
    const auto pos = std::find(order.begin(), order.end(), killer) - order.begin();
    if (pos > 0) {
      KillMap earlier = kills;
      earlier[0].members = {order[pos - 1]};
      EXPECT_GT(Apfd(order, earlier).apfd, base);
    }
  }
}

TEST(ApfdTest, PermutingTailAfterLastFirstKillChangesNothing) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng() % 20;
    auto order = Order(n);
    const std::size_t cut = 1 + rng() % (n - 2);
    KillMap kills;
    for (std::size_t m = 0; m < 1 + rng() % 5; ++m) {
      kills.push_back({"m" + std::to_string(m), {order[rng() % cut]}});
    }
    const double base = Apfd(order, kills).apfd;
    std::shuffle(order.begin() + static_cast<long>(cut), order.end(), rng);
    EXPECT_DOUBLE_EQ(Apfd(order, kills).apfd, base);
  }
}

TEST(FirstFaultTest, PositionsMatchLinearScan) {
  const auto order = Order(4);
  const auto simple = FirstFaultPositions(order, {{"f1", {"t1"}}, {"f2", {}}, {"f3", {"t9"}}});
  ASSERT_EQ(simple.size(), 3u);
  EXPECT_EQ(simple[0].position, 1u);
  EXPECT_FALSE(simple[1].position.has_value());
  EXPECT_FALSE(simple[2].position.has_value());

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    auto o = Order(n);
    std::shuffle(o.begin(), o.end(), rng);
    FaultRevealMap faults;
    for (int f = 0; f < 5; ++f) {
      IdSetRow row{"F-" + std::to_string(f), {}};
      for (std::size_t t = 1; t <= n; ++t) {
        if (rng() % 5 == 0) row.members.push_back("t" + std::to_string(t));
      }
      faults.push_back(row);
    }
    const auto positions = FirstFaultPositions(o, faults);
    for (std::size_t f = 0; f < faults.size(); ++f) {
      std::optional<std::size_t> expected;
      for (std::size_t k = 0; k < o.size() && !expected; ++k) {
        const auto& m = faults[f].members;
        if (std::find(m.begin(), m.end(), o[k]) != m.end()) expected = k + 1;
      }
      EXPECT_EQ(positions[f].fault_id, faults[f].id);
      EXPECT_EQ(positions[f].position, expected);
    }
  }
}

TEST(SummaryTest, FlatAndPerProjectMedians) {
  const std::vector<FaultPosition> positions = {
      {"Lang-1", 1}, {"Lang-2", 3}, {"Lang-3", 10}, {"Math-1", 2}, {"Math-2", 4},
      {"Time-1", std::nullopt}};
  const auto s = SummarisePositions(positions);
  EXPECT_EQ(s.detected, 5u);
  EXPECT_EQ(s.undetected, 1u);
  EXPECT_EQ(s.flat, 3.0);
  // Lang median 3, Math median 3; Time has nothing detected.
  EXPECT_EQ(s.per_project, 3.0);
  EXPECT_FALSE(SummarisePositions({{"X-1", std::nullopt}}).flat.has_value());
  EXPECT_EQ(ProjectOf("Lang-12"), "Lang");
  EXPECT_EQ(ProjectOf("plain"), "plain");
  EXPECT_EQ(Median({4, 1, 3, 2}), 2.5);
  EXPECT_EQ(CodeOf([] { Median({}); }), ErrorCode::kEmptySample);
}

TEST(A12Test, WorkedValues) {
  const std::vector<double> x = {1, 2, 3};
  EXPECT_EQ(A12(x, x), 0.5);
  EXPECT_EQ(A12(std::vector<double>{5, 6}, std::vector<double>{1, 2, 3}), 1.0);
  EXPECT_EQ(A12(std::vector<double>{1, 2}, std::vector<double>{2, 3}), 0.125);
  EXPECT_EQ(CodeOf([] { A12({}, std::vector<double>{1}); }), ErrorCode::kEmptySample);
}

TEST(A12Test, ComplementForTieFreeSamples) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(1 + rng() % 10), y(1 + rng() % 10);
    for (auto& v : x) v = static_cast<double>(rng() % 1000000) + 0.25;
    for (auto& v : y) v = static_cast<double>(rng() % 1000000) + 0.75;
    EXPECT_NEAR(A12(x, y) + A12(y, x), 1.0, 1e-12);
  }
}

TEST(MannWhitneyTest, WorkedValues) {
  const std::vector<double> x = {1, 2, 3}, y = {4, 5, 6};
  EXPECT_EQ(MannWhitneyU(x, y).u, 0.0);
  EXPECT_EQ(MannWhitneyU(y, x).u, 9.0);
  const std::vector<double> same = {2, 2, 7, 9};
  EXPECT_EQ(MannWhitneyU(same, same).u, 8.0);
  const auto flat = MannWhitneyU(std::vector<double>{3, 3}, std::vector<double>{3, 3, 3});
  EXPECT_TRUE(flat.degenerate);
  EXPECT_EQ(flat.p, 1.0);
  EXPECT_EQ(CodeOf([] { MannWhitneyU({}, std::vector<double>{1}); }), ErrorCode::kEmptySample);
}

TEST(MannWhitneyTest, PValuesMatchReferenceImplementation) {
  // Two-sided normal approximation with tie and continuity corrections, as
  // computed by scipy.stats.mannwhitneyu(method="asymptotic").
  struct Case {
    std::vector<double> x, y;
    double u, p;
  };
  const Case cases[] = {
      {{1, 2, 3, 4, 5}, {3, 4, 5, 6, 7, 8}, 4.5, 0.066015431521231},
      {{1.5, 2.5, 2.5, 9}, {2.5, 3, 3, 4, 10}, 5.0, 0.26017490098354834},
      {{1, 2, 3}, {4, 5, 6}, 0.0, 0.08085559837005224},
  };
  for (const auto& c : cases) {
    const auto r = MannWhitneyU(c.x, c.y);
    EXPECT_EQ(r.u, c.u);
    EXPECT_NEAR(r.p, c.p, 1e-12);
  }
}

TEST(MannWhitneyTest, UMatchesPairCounting) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(1 + rng() % 12), y(1 + rng() % 12);
    for (auto& v : x) v = static_cast<double>(rng() % 8);
    for (auto& v : y) v = static_cast<double>(rng() % 8);
    const auto r = MannWhitneyU(x, y);
    EXPECT_EQ(r.u, PairCountU(x, y));
    EXPECT_GE(r.p, 0.0);
    EXPECT_LE(r.p, 1.0);
    EXPECT_NEAR(r.u + MannWhitneyU(y, x).u, static_cast<double>(x.size() * y.size()), 1e-9);
  }
}

}  // namespace
}  // namespace divtcp::evaluate
