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

// Edit distance over byte tokens (unit-cost insert, delete, substitute).

#ifndef DIVTCP_DISTANCE_LEVENSHTEIN_H_
#define DIVTCP_DISTANCE_LEVENSHTEIN_H_

#include <cstdint>
#include <span>
#include <vector>

namespace divtcp::distance {

using Tokens = std::span<const std::uint8_t>;

// Bit-vector algorithm (Myers 1999, block form by Hyyrö): one column of the
// DP table per text token, 64 pattern rows per machine word. The pattern's
// match masks are built once, so one pattern can be compared to many texts.
class LevenshteinPattern {
 public:
  explicit LevenshteinPattern(Tokens pattern);

  std::size_t size() const { return length_; }
  std::uint32_t Distance(Tokens text) const;

 private:
  std::size_t length_ = 0;
  std::size_t blocks_ = 0;
  std::vector<std::uint64_t> peq_;  // [token * blocks_ + block]
};

std::uint32_t Levenshtein(Tokens a, Tokens b);

// Plain two-row dynamic program, O(min(|a|,|b|)) memory. Kept as the
// reference the bit-vector version is checked against.
std::uint32_t LevenshteinTwoRow(Tokens a, Tokens b);

}  // namespace divtcp::distance

#endif  // DIVTCP_DISTANCE_LEVENSHTEIN_H_
