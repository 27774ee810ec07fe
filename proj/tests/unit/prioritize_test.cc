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
#include <set>
#include <string>
#include <vector>

#include "common/error.h"
#include "oracles.h"
#include "prioritize/prioritize.h"

namespace divtcp::prioritize {
namespace {

using testing_oracles::FastPwTrace;
using testing_oracles::GreedyAdditionalTrace;
using testing_oracles::LedruTrace;
using testing_oracles::RandomArtifacts;
using testing_oracles::RandomCoverage;
using testing_oracles::RandomMatrix;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kInvalidArgument;
}

bool IsPermutation(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && std::adjacent_find(a.begin(), a.end()) == a.end();
}

std::vector<std::string> Ids(std::initializer_list<const char*> ids) {
  return {ids.begin(), ids.end()};
}

TEST(LedruTest, WorkedMatrix) {
  distance::SimilarityMatrix m{{"A", "B", "C"}, {0, 1, 10, 1, 0, 2, 10, 2, 0}};
  EXPECT_EQ(Ledru(m).ids, Ids({"C", "A", "B"}));
  EXPECT_EQ(Ledru(m).approach, "ledru");
  EXPECT_EQ(Ledru({{"only"}, {0}}).ids, Ids({"only"}));
  EXPECT_EQ(CodeOf([] { Ledru({}); }), ErrorCode::kEmptyMatrix);
}

TEST(LedruTest, MatchesBruteForceTrace) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = RandomMatrix(rng, 1 + rng() % 15, trial % 2 == 0 ? 5 : 1000);
    const auto order = Ledru(m).ids;
    EXPECT_EQ(order, LedruTrace(m)) << trial;
    EXPECT_TRUE(IsPermutation(order, m.ids));
  }
}

TEST(LedruTest, InvariantUnderMonotoneTransform) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = RandomMatrix(rng, 2 + rng() % 12, 50);
    const auto before = Ledru(m).ids;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i != j) m.at(i, j) = 3 * m.at(i, j) + 7;
      }
    }
    EXPECT_EQ(Ledru(m).ids, before) << trial;
  }
}

TEST(FastPwTest, SingleTestAndErrors) {
  corpus::EncodedArtifact a;
  a.id = "only";
  a.tokens = {1, 2, 3};
  lsh::MinHashParams params;
  EXPECT_EQ(FastPw({a}, params).ids, Ids({"only"}));
  params.shingle_k = 1;
  params.num_hashes = 4;
  params.bands = 2;
  params.rows = 2;
  EXPECT_EQ(FastPw({a}, params).ids, Ids({"only"}));
  EXPECT_EQ(CodeOf([&] { FastPw({}, params); }), ErrorCode::kEmptyCorpus);
  params.rows = 3;
  EXPECT_EQ(CodeOf([&] { FastPw({a}, params); }), ErrorCode::kInvalidArgument);
}

TEST(FastPwTest, DisjointShinglesStartAtLowestIndex) {
  std::vector<corpus::EncodedArtifact> artifacts(3);
  const char* texts[] = {"aaaaaaaa", "bbbbbbbb", "cccccccc"};
  for (int i = 0; i < 3; ++i) {
    artifacts[i].id = "t" + std::to_string(i);
    artifacts[i].tokens.assign(texts[i], texts[i] + 8);
  }
  const lsh::MinHashParams params;
  const auto order = FastPw(artifacts, params).ids;
  EXPECT_EQ(order.front(), "t0");
  EXPECT_EQ(order, FastPwTrace(artifacts, params));
}

TEST(FastPwTest, MatchesStraightLineTrace) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    lsh::MinHashParams params;
    if (trial % 2 == 1) {
      params.num_hashes = 16;
      params.bands = 8;
      params.rows = 2;
      params.shingle_k = 2;
    }
    params.seed = 1 + trial;
    const auto artifacts = RandomArtifacts(rng, 1 + rng() % 12, 30, trial % 3 == 0 ? 2 : 6);
    const auto order = FastPw(artifacts, params).ids;
    EXPECT_EQ(order, FastPwTrace(artifacts, params)) << trial;
    std::vector<std::string> ids;
    for (const auto& a : artifacts) ids.push_back(a.id);
    EXPECT_TRUE(IsPermutation(order, ids));
  }
}

TEST(FastPwTest, DeterministicAcrossRunsAndThreads) {
  std::mt19937_64 rng(53);
  const auto artifacts = RandomArtifacts(rng, 60, 80, 8);
  const lsh::MinHashParams params;
  const auto once = FastPw(artifacts, params, 1).ids;
  EXPECT_EQ(FastPw(artifacts, params, 1).ids, once);
  EXPECT_EQ(FastPw(artifacts, params, 4).ids, once);
  EXPECT_EQ(BuildSignatures(artifacts, params, 4), BuildSignatures(artifacts, params, 1));
}

TEST(GreedyTest, WorkedExamples) {
  const auto total = ParseCoverageCsv("t1,1;2;3\nt2,1;2\nt3,4\n");
  EXPECT_EQ(GreedyTotal(total).ids, Ids({"t1", "t2", "t3"}));
  const auto additional = ParseCoverageCsv("t1,1;2;3\nt2,1;2;3\nt3,4\n");
  EXPECT_EQ(GreedyAdditional(additional).ids, Ids({"t1", "t3", "t2"}));
  EXPECT_EQ(GreedyAdditional(ParseCoverageCsv("solo,x\n")).ids, Ids({"solo"}));
}

TEST(GreedyTest, TiesKeepInputOrder) {
  const auto equal = ParseCoverageCsv("c,1;2\na,1;2\nb,2;1\n");
  EXPECT_EQ(GreedyTotal(equal).ids, Ids({"c", "a", "b"}));
  EXPECT_EQ(GreedyAdditional(equal).ids, Ids({"c", "a", "b"}));
  const auto empty = ParseCoverageCsv("c,\na,\nb\n");
  EXPECT_EQ(GreedyTotal(empty).ids, Ids({"c", "a", "b"}));
  EXPECT_EQ(GreedyAdditional(empty).ids, Ids({"c", "a", "b"}));
}

TEST(GreedyTest, DisjointSetsMakeAdditionalEqualTotal) {
  const auto cov = ParseCoverageCsv("a,1\nb,2;3;4\nc,5;6\nd,\ne,7;8;9\n");
  EXPECT_EQ(GreedyAdditional(cov).ids, GreedyTotal(cov).ids);
}

TEST(GreedyTest, AdditionalMatchesBruteForce) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cov = RandomCoverage(rng, 1 + rng() % 15, 1 + rng() % 20);
    const auto order = GreedyAdditional(cov).ids;
    EXPECT_EQ(order, GreedyAdditionalTrace(cov)) << trial;
    EXPECT_TRUE(IsPermutation(order, cov.ids));
    EXPECT_TRUE(IsPermutation(GreedyTotal(cov).ids, cov.ids));
  }
}

TEST(GreedyTest, AdditionalReachesFullCoverageNoLater) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cov = RandomCoverage(rng, 2 + rng() % 15, 1 + rng() % 25);
    std::set<std::uint32_t> all;
    for (const auto& s : cov.entities) all.insert(s.begin(), s.end());
    auto prefix = [&](const std::vector<std::string>& order) {
      std::set<std::uint32_t> seen;
      for (std::size_t k = 0; k < order.size(); ++k) {
        const auto i = std::find(cov.ids.begin(), cov.ids.end(), order[k]) - cov.ids.begin();
        seen.insert(cov.entities[i].begin(), cov.entities[i].end());
        if (seen == all) return k;
      }
      return order.size();
    };
    EXPECT_LE(prefix(GreedyAdditional(cov).ids), prefix(GreedyTotal(cov).ids)) << trial;
  }
}

TEST(GreedyTest, CoverageCsv) {
  const auto cov = ParseCoverageCsv("t1,b;a;a\nt2,c\n\nt3,\n");
  ASSERT_EQ(cov.ids, Ids({"t1", "t2", "t3"}));
  EXPECT_EQ(cov.entity_count, 3u);
  EXPECT_EQ(cov.entities[0].size(), 2u);
  EXPECT_TRUE(cov.entities[2].empty());
  EXPECT_EQ(CodeOf([] { ParseCoverageCsv("t1,a\nt1,b\n"); }), ErrorCode::kDuplicateId);
  EXPECT_EQ(CodeOf([] { ParseCoverageCsv(",a\n"); }), ErrorCode::kMalformed);
  EXPECT_EQ(CodeOf([] { GreedyTotal(ParseCoverageCsv("")); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(CodeOf([] { GreedyAdditional(ParseCoverageCsv("")); }), ErrorCode::kEmptyInput);
}

TEST(RandomOrderTest, SeededPermutation) {
  EXPECT_EQ(RandomOrder(Ids({"x"}), 1).ids, Ids({"x"}));
  std::vector<std::string> ids;
  for (int i = 0; i < 50; ++i) ids.push_back("t" + std::to_string(i));
  const auto a = RandomOrder(ids, 7).ids;
  EXPECT_EQ(RandomOrder(ids, 7).ids, a);
  EXPECT_TRUE(IsPermutation(a, ids));
  EXPECT_NE(RandomOrder(ids, 8).ids, a);
  EXPECT_NE(a, ids);
  EXPECT_EQ(CodeOf([] { RandomOrder({}, 1); }), ErrorCode::kEmptyInput);
}

TEST(RandomOrderTest, PositionsAreRoughlyUniform) {
  const auto ids = Ids({"a", "b", "c", "d"});
  std::vector<int> first(4, 0);
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    const auto order = RandomOrder(ids, seed).ids;
    ++first[std::find(ids.begin(), ids.end(), order[0]) - ids.begin()];
  }
  for (int count : first) EXPECT_NEAR(count, 1000, 150);
}

}  // namespace
}  // namespace divtcp::prioritize
