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

// Seeded generator for benchmark corpora: test-like source text plus
// instruction sequences drawn from an opcode mix typical of unit tests.

#ifndef DIVTCP_PIPELINE_SYNTHETIC_H_
#define DIVTCP_PIPELINE_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "corpus/encode.h"

namespace divtcp::pipeline {

struct SyntheticParams {
  std::size_t count = 500;
  std::size_t text_length = 700;     // mean characters per test text
  std::size_t bytecode_length = 40;  // mean encoded bytes (opcode-imm, unfiltered)
  std::uint64_t seed = 1;
};

// Records carry both text and instructions; ids are "bench.Synthetic#testNNNN".
std::vector<corpus::TestCaseRecord> GenerateSynthetic(const SyntheticParams& params);

}  // namespace divtcp::pipeline

#endif  // DIVTCP_PIPELINE_SYNTHETIC_H_
