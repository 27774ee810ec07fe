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
#include <atomic>
#include <chrono>
#include <thread>

#include "common/error.h"
#include "prioritize/prioritize.h"

namespace divtcp::prioritize {

std::vector<lsh::Signature> BuildSignatures(const std::vector<corpus::EncodedArtifact>& artifacts,
                                            const lsh::MinHashParams& params, unsigned threads) {
  params.Validate();
  const lsh::HashFamily family(params.num_hashes, params.seed);
  std::vector<lsh::Signature> signatures(artifacts.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < artifacts.size(); i = next++) {
      signatures[i] =
          lsh::MinHashSignature(lsh::Shingles(artifacts[i].tokens, params.shingle_k), family);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, artifacts.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return signatures;
}

PrioritizedOrder FastPw(const std::vector<corpus::EncodedArtifact>& artifacts,
                        const lsh::MinHashParams& params, unsigned threads) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::size_t n = artifacts.size();
  if (n == 0) throw Error(ErrorCode::kEmptyCorpus, "no artefacts to prioritise");
  params.Validate();

  const auto signatures = BuildSignatures(artifacts, params, threads);
  const lsh::LshIndex buckets(signatures, params);
  const auto prepared = Clock::now();

  PrioritizedOrder out;
  out.approach = "fast-pw";
  out.ids.reserve(n);
  const lsh::Signature empty(params.num_hashes, lsh::kSentinel);
  lsh::Signature visited = empty;  // cumulative signature of the picks so far
  std::vector<bool> picked(n, false);
  std::vector<bool> similar(n, false);
  std::vector<std::uint32_t> pool;
  pool.reserve(n);

  while (out.ids.size() < n) {
    auto candidates = buckets.Candidates(visited);
    if (candidates.empty()) {
      visited = empty;
      candidates = buckets.Candidates(visited);
    }
    for (auto c : candidates) similar[c] = true;
    pool.clear();
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!picked[i] && !similar[i]) pool.push_back(i);
    }
    if (pool.empty()) {
      for (std::uint32_t i = 0; i < n; ++i) {
        if (!picked[i]) pool.push_back(i);
      }
    }
    for (auto c : candidates) similar[c] = false;

    std::uint32_t best = pool.front();
    double best_distance = lsh::JaccardDistanceEstimate(visited, signatures[best]);
    for (std::size_t k = 1; k < pool.size(); ++k) {
      const double d = lsh::JaccardDistanceEstimate(visited, signatures[pool[k]]);
      if (d > best_distance) {
        best = pool[k];
        best_distance = d;
      }
    }
    lsh::UpdateSignature(visited, signatures[best]);
    picked[best] = true;
    out.ids.push_back(artifacts[best].id);
  }
  const auto done = Clock::now();
  out.preparation_seconds = std::chrono::duration<double>(prepared - start).count();
  out.prioritisation_seconds = std::chrono::duration<double>(done - prepared).count();
  return out;
}

}  // namespace divtcp::prioritize
