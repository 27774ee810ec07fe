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

#ifndef DIVTCP_DISTANCE_MATRIX_H_
#define DIVTCP_DISTANCE_MATRIX_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "corpus/encode.h"

namespace divtcp::distance {

// Symmetric pairwise dissimilarities, zero diagonal, row-major.
struct SimilarityMatrix {
  std::vector<std::string> ids;
  std::vector<std::uint32_t> values;

  std::size_t size() const { return ids.size(); }
  std::uint32_t at(std::size_t i, std::size_t j) const { return values[i * ids.size() + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return values[i * ids.size() + j]; }

  bool operator==(const SimilarityMatrix&) const = default;
};

struct MatrixBuild {
  SimilarityMatrix matrix;
  double preparation_seconds = 0;
};

// Levenshtein over every pair. Rows are shared out to `threads` workers (0
// picks the hardware concurrency); the values do not depend on it. Throws
// Error(kEmptyInput) and Error(kDuplicateId).
MatrixBuild BuildMatrix(const std::vector<corpus::EncodedArtifact>& artifacts,
                        unsigned threads = 1);

// "test_id,A,B\nA,0,3\nB,3,0\n". Throws Error(kInvalidArgument) for ids
// containing ',' or line breaks.
std::string WriteMatrixCsv(const SimilarityMatrix& matrix);
// Throws Error(kMalformed) (shape, cell syntax, asymmetry, diagonal, row id
// differing from the header) and Error(kDuplicateId).
SimilarityMatrix ReadMatrixCsv(std::string_view csv);

}  // namespace divtcp::distance

#endif  // DIVTCP_DISTANCE_MATRIX_H_
