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

#include "lsh/minhash.h"

#include <algorithm>
#include <random>
#include <string>

#include "common/error.h"

namespace divtcp::lsh {
namespace {

constexpr std::uint64_t kBase = 0x100000001B3ULL;  // odd multiplier for the window polynomial

std::uint64_t Mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void CheckShape(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kBadShape,
                "signature lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

void MinHashParams::Validate() const {
  if (num_hashes == 0 || shingle_k == 0 || bands == 0 || rows == 0) {
    throw Error(ErrorCode::kInvalidArgument, "hashes, shingle size, bands and rows must be positive");
  }
  if (std::uint64_t{bands} * rows != num_hashes) {
    throw Error(ErrorCode::kInvalidArgument, "bands * rows (" + std::to_string(bands) + " * " +
                                                 std::to_string(rows) + ") must equal hashes (" +
                                                 std::to_string(num_hashes) + ")");
  }
}

std::vector<std::uint64_t> Shingles(std::span<const std::uint8_t> tokens, std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "shingle size must be positive");
  std::vector<std::uint64_t> out;
  if (tokens.size() < k) {
    std::uint64_t h = 0;
    for (auto t : tokens) h = h * kBase + (t + 1u);
    out.push_back(Mix(h ^ tokens.size()));
    return out;
  }
  // h = sum (t_i + 1) * B^(k-1-i) over the window, mod 2^64.
  std::uint64_t top = 1;  // B^(k-1)
  for (std::uint32_t i = 1; i < k; ++i) top *= kBase;
  std::uint64_t h = 0;
  for (std::uint32_t i = 0; i < k; ++i) h = h * kBase + (tokens[i] + 1u);
  out.reserve(tokens.size() - k + 1);
  out.push_back(Mix(h ^ k));
  for (std::size_t i = k; i < tokens.size(); ++i) {
    h = (h - (tokens[i - k] + 1u) * top) * kBase + (tokens[i] + 1u);
    out.push_back(Mix(h ^ k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HashFamily::HashFamily(std::uint32_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  a_hi_.resize(size);
  a_lo_.resize(size);
  b_hi_.resize(size);
  b_lo_.resize(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    a_hi_[i] = rng();
    a_lo_[i] = rng() | 1;  // odd multiplier
    b_hi_[i] = rng();
    b_lo_[i] = rng();
  }
}

Signature MinHashSignature(std::span<const std::uint64_t> shingles, const HashFamily& family) {
  Signature sig(family.size(), kSentinel);
  for (std::size_t i = 0; i < sig.size(); ++i) {
    std::uint64_t best = kSentinel;
    for (const std::uint64_t s : shingles) best = std::min(best, family.Hash(i, s));
    sig[i] = best;
  }
  return sig;
}

double JaccardDistanceEstimate(const Signature& a, const Signature& b) {
  CheckShape(a.size(), b.size());
  if (a.empty()) return 1.0;
  std::size_t equal = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i] && a[i] != kSentinel) ++equal;
  }
  return 1.0 - static_cast<double>(equal) / static_cast<double>(a.size());
}

void UpdateSignature(Signature& accumulated, const Signature& s) {
  CheckShape(accumulated.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) accumulated[i] = std::min(accumulated[i], s[i]);
}

std::uint64_t BandDigest(const Signature& s, std::uint32_t band, std::uint32_t rows) {
  std::uint64_t h = Mix(band + 0x9E3779B97F4A7C15ULL);
  const std::size_t begin = std::size_t{band} * rows;
  for (std::size_t i = begin; i < begin + rows; ++i) h = Mix(h ^ s[i]) + 0x9E3779B97F4A7C15ULL;
  return h;
}

LshIndex::LshIndex(const std::vector<Signature>& signatures, const MinHashParams& params)
    : bands_(params.bands), rows_(params.rows), count_(signatures.size()), tables_(params.bands) {
  params.Validate();
  for (std::size_t id = 0; id < signatures.size(); ++id) {
    CheckShape(signatures[id].size(), params.num_hashes);
    for (std::uint32_t band = 0; band < bands_; ++band) {
      tables_[band][BandDigest(signatures[id], band, rows_)].push_back(
          static_cast<std::uint32_t>(id));
    }
  }
}

std::vector<std::uint32_t> LshIndex::Candidates(const Signature& query) const {
  CheckShape(query.size(), std::size_t{bands_} * rows_);
  std::vector<std::uint32_t> out;
  for (std::uint32_t band = 0; band < bands_; ++band) {
    auto it = tables_[band].find(BandDigest(query, band, rows_));
    if (it != tables_[band].end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace divtcp::lsh
