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

#ifndef DIVTCP_COMMON_RANDOM_H_
#define DIVTCP_COMMON_RANDOM_H_

#include <cstdint>
#include <random>

namespace divtcp {

// Uniform integer in [0, bound). The standard distributions are
// implementation-defined, so seeded outputs would differ between standard
// libraries; mt19937_64 itself is fully specified.
inline std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace divtcp

#endif  // DIVTCP_COMMON_RANDOM_H_
