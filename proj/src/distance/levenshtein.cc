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

#include "distance/levenshtein.h"

#include <algorithm>

namespace divtcp::distance {

LevenshteinPattern::LevenshteinPattern(Tokens pattern)
    : length_(pattern.size()), blocks_((pattern.size() + 63) / 64), peq_(256 * blocks_, 0) {
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    peq_[pattern[i] * blocks_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::uint32_t LevenshteinPattern::Distance(Tokens text) const {
  if (length_ == 0) return static_cast<std::uint32_t>(text.size());
  if (text.empty()) return static_cast<std::uint32_t>(length_);

  // Vertical deltas per block: Pv bit = +1, Mv bit = -1 (column 0 is all +1).
  std::vector<std::uint64_t> pv_store;
  std::vector<std::uint64_t> mv_store;
  std::uint64_t pv_single = ~std::uint64_t{0};
  std::uint64_t mv_single = 0;
  std::uint64_t* pv = &pv_single;
  std::uint64_t* mv = &mv_single;
  if (blocks_ > 1) {
    pv_store.assign(blocks_, ~std::uint64_t{0});
    mv_store.assign(blocks_, 0);
    pv = pv_store.data();
    mv = mv_store.data();
  }

  const std::uint64_t last_bit = std::uint64_t{1} << ((length_ - 1) % 64);
  constexpr std::uint64_t kTopBit = std::uint64_t{1} << 63;
  std::int64_t score = static_cast<std::int64_t>(length_);

  for (const std::uint8_t token : text) {
    const std::uint64_t* eq_row = &peq_[token * blocks_];
    int hin = 1;  // row 0 grows by one per column
    for (std::size_t b = 0; b < blocks_; ++b) {
      std::uint64_t eq = eq_row[b];
      const std::uint64_t p = pv[b];
      const std::uint64_t m = mv[b];
      const std::uint64_t hin_neg = hin < 0 ? 1 : 0;
      const std::uint64_t xv = eq | m;
      eq |= hin_neg;
      const std::uint64_t xh = (((eq & p) + p) ^ p) | eq;
      std::uint64_t ph = m | ~(xh | p);
      std::uint64_t mh = p & xh;
      const std::uint64_t out_bit = b + 1 == blocks_ ? last_bit : kTopBit;
      const int hout = (ph & out_bit) ? 1 : (mh & out_bit) ? -1 : 0;
      ph = (ph << 1) | (hin > 0 ? 1 : 0);
      mh = (mh << 1) | hin_neg;
      pv[b] = mh | ~(xv | ph);
      mv[b] = ph & xv;
      hin = hout;
    }
    score += hin;
  }
  return static_cast<std::uint32_t>(score);
}

std::uint32_t Levenshtein(Tokens a, Tokens b) {
  // The shorter sequence as pattern keeps the block count low.
  if (a.size() > b.size()) std::swap(a, b);
  return LevenshteinPattern(a).Distance(b);
}

std::uint32_t LevenshteinTwoRow(Tokens a, Tokens b) {
  if (a.size() < b.size()) std::swap(a, b);  // b is the shorter: rows sized by it
  std::vector<std::uint32_t> prev(b.size() + 1);
  std::vector<std::uint32_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::uint32_t substitute = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, substitute});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace divtcp::distance
