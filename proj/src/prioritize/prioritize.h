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

// Test orderings. Every function returns a permutation of its input ids;
// ties always go to the lowest input index.

#ifndef DIVTCP_PRIORITIZE_PRIORITIZE_H_
#define DIVTCP_PRIORITIZE_PRIORITIZE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "corpus/encode.h"
#include "distance/matrix.h"
#include "lsh/minhash.h"

namespace divtcp::prioritize {

struct PrioritizedOrder {
  std::vector<std::string> ids;
  double preparation_seconds = 0;
  double prioritisation_seconds = 0;
  std::string approach;
};

// Maximin selection over a dissimilarity matrix. The first pick maximises
// the distance to the nearest other test; each later pick maximises the
// distance to the nearest already-picked test. Throws Error(kEmptyMatrix).
// preparation_seconds is left at zero for the caller to fill in.
PrioritizedOrder Ledru(const distance::SimilarityMatrix& matrix);

// Per-test signatures, built on `threads` workers (0 = hardware
// concurrency). Identical for any thread count.
std::vector<lsh::Signature> BuildSignatures(const std::vector<corpus::EncodedArtifact>& artifacts,
                                            const lsh::MinHashParams& params, unsigned threads);

// Similarity-based ordering with MinHash and LSH. Signature and bucket
// construction count as preparation, the selection loop as prioritisation.
// Throws Error(kEmptyCorpus), Error(kInvalidArgument) for bad params.
PrioritizedOrder FastPw(const std::vector<corpus::EncodedArtifact>& artifacts,
                        const lsh::MinHashParams& params, unsigned threads = 1);

// Covered entities per test; entity names are interned to dense indices.
struct CoverageMatrix {
  std::vector<std::string> ids;
  std::vector<std::vector<std::uint32_t>> entities;  // sorted, unique
  std::size_t entity_count = 0;
};

// "test_id,e1;e2;..." rows. Throws Error(kMalformed) and Error(kDuplicateId).
CoverageMatrix ParseCoverageCsv(std::string_view csv);

// Sorted by covered-entity count, descending. Throws Error(kEmptyInput).
PrioritizedOrder GreedyTotal(const CoverageMatrix& coverage);
// Largest count of not-yet-covered entities first; once no remaining test
// adds anything, the covered set is cleared and selection continues.
// Throws Error(kEmptyInput).
PrioritizedOrder GreedyAdditional(const CoverageMatrix& coverage);

// Uniform shuffle driven by mt19937_64(seed) with bounded rejection
// sampling, so the permutation is the same on every platform. Throws
// Error(kEmptyInput).
PrioritizedOrder RandomOrder(const std::vector<std::string>& ids, std::uint64_t seed);

}  // namespace divtcp::prioritize

#endif  // DIVTCP_PRIORITIZE_PRIORITIZE_H_
