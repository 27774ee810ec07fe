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

// Shingling, MinHash signatures and banded LSH buckets.

#ifndef DIVTCP_LSH_MINHASH_H_
#define DIVTCP_LSH_MINHASH_H_

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

namespace divtcp::lsh {

struct MinHashParams {
  std::uint32_t num_hashes = 256;
  std::uint32_t shingle_k = 5;
  std::uint32_t bands = 32;
  std::uint32_t rows = 8;
  std::uint64_t seed = 1;

  // Throws Error(kInvalidArgument) unless all sizes are positive and
  // bands * rows == num_hashes.
  void Validate() const;
};

inline constexpr std::uint64_t kSentinel = std::numeric_limits<std::uint64_t>::max();

using Signature = std::vector<std::uint64_t>;

// Sorted, duplicate-free digests of every k-token window. A sequence shorter
// than k yields the digest of the whole sequence.
std::vector<std::uint64_t> Shingles(std::span<const std::uint8_t> tokens, std::uint32_t k);

// h_i(x) = high 64 bits of (a_i * x + b_i) mod 2^128, with a_i, b_i drawn
// from mt19937_64(seed). Outputs never equal kSentinel.
class HashFamily {
 public:
  HashFamily(std::uint32_t size, std::uint64_t seed);

  std::size_t size() const { return a_hi_.size(); }
  std::uint64_t Hash(std::size_t i, std::uint64_t x) const {
    using u128 = unsigned __int128;
    const u128 a = (u128{a_hi_[i]} << 64) | a_lo_[i];
    const u128 b = (u128{b_hi_[i]} << 64) | b_lo_[i];
    const auto h = static_cast<std::uint64_t>((a * x + b) >> 64);
    return h == kSentinel ? kSentinel - 1 : h;
  }

 private:
  std::vector<std::uint64_t> a_hi_, a_lo_, b_hi_, b_lo_;
};

// All-sentinel for an empty set.
Signature MinHashSignature(std::span<const std::uint64_t> shingles, const HashFamily& family);

// 1 - (positions equal and not sentinel) / length. Throws Error(kBadShape).
double JaccardDistanceEstimate(const Signature& a, const Signature& b);

// Componentwise minimum, in place. Throws Error(kBadShape).
void UpdateSignature(Signature& accumulated, const Signature& s);

// Digest of components [band * rows, (band + 1) * rows).
std::uint64_t BandDigest(const Signature& s, std::uint32_t band, std::uint32_t rows);

// Band tables mapping digests to the indices (into the build input) hashed
// there. Built once, then read-only.
class LshIndex {
 public:
  // Throws Error(kBadShape) if a signature is not num_hashes long.
  LshIndex(const std::vector<Signature>& signatures, const MinHashParams& params);

  std::size_t size() const { return count_; }
  // Sorted union of the buckets the query's band digests land in. Throws
  // Error(kBadShape).
  std::vector<std::uint32_t> Candidates(const Signature& query) const;

 private:
  std::uint32_t bands_;
  std::uint32_t rows_;
  std::size_t count_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> tables_;
};

}  // namespace divtcp::lsh

#endif  // DIVTCP_LSH_MINHASH_H_
