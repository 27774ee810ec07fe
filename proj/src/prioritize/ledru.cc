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

#include <chrono>
#include <limits>

#include "common/error.h"
#include "prioritize/prioritize.h"

namespace divtcp::prioritize {

PrioritizedOrder Ledru(const distance::SimilarityMatrix& matrix) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorCode::kEmptyMatrix, "similarity matrix is empty");

  constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();
  // nearest[i]: distance from i to the closest test that counts at this step.
  std::vector<std::uint64_t> nearest(n, kUnbounded);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) nearest[i] = std::min<std::uint64_t>(nearest[i], matrix.at(i, j));
    }
  }

  PrioritizedOrder out;
  out.approach = "ledru";
  out.ids.reserve(n);
  std::vector<bool> picked(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!picked[i] && (best == n || nearest[i] > nearest[best])) best = i;
    }
    picked[best] = true;
    out.ids.push_back(matrix.ids[best]);
    // From now on only distances to picked tests count.
    for (std::size_t i = 0; i < n; ++i) {
      if (picked[i]) continue;
      const std::uint64_t d = matrix.at(i, best);
      nearest[i] = step == 0 ? d : std::min(nearest[i], d);
    }
  }
  out.prioritisation_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace divtcp::prioritize
