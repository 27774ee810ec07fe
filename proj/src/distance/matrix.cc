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

#include "distance/matrix.h"

#include <atomic>
#include <charconv>
#include <chrono>
#include <thread>
#include <unordered_set>

#include "common/error.h"
#include "common/io.h"
#include "distance/levenshtein.h"

namespace divtcp::distance {

MatrixBuild BuildMatrix(const std::vector<corpus::EncodedArtifact>& artifacts, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = artifacts.size();
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "no artefacts to compare");

  MatrixBuild out;
  auto& m = out.matrix;
  m.ids.reserve(n);
  std::unordered_set<std::string_view> seen;
  for (const auto& a : artifacts) {
    if (!seen.insert(a.id).second) throw Error(ErrorCode::kDuplicateId, "duplicate id " + a.id);
    m.ids.push_back(a.id);
  }
  m.values.assign(n * n, 0);

  // Upper triangle only, mirrored; each row is written by exactly one worker.
  std::atomic<std::size_t> next_row{0};
  auto work = [&] {
    for (std::size_t i = next_row++; i < n; i = next_row++) {
      const LevenshteinPattern pattern(artifacts[i].tokens);
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::uint32_t d = pattern.Distance(artifacts[j].tokens);
        m.values[i * n + j] = d;
        m.values[j * n + i] = d;
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  out.preparation_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string WriteMatrixCsv(const SimilarityMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::string out = "test_id";
  for (const auto& id : matrix.ids) {
    if (id.find_first_of(",\r\n") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "id cannot be written to CSV: " + id);
    }
    out += ',';
    out += id;
  }
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += matrix.ids[i];
    for (std::size_t j = 0; j < n; ++j) {
      out += ',';
      out += std::to_string(matrix.at(i, j));
    }
    out += '\n';
  }
  return out;
}

SimilarityMatrix ReadMatrixCsv(std::string_view csv) {
  auto lines = SplitLines(csv);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorCode::kMalformed, "empty similarity CSV");

  const auto header = Split(lines[0], ',');
  if (header.empty() || header[0] != "test_id") {
    throw Error(ErrorCode::kMalformed, "CSV header must start with test_id");
  }
  SimilarityMatrix m;
  std::unordered_set<std::string_view> seen;
  for (std::size_t k = 1; k < header.size(); ++k) {
    if (header[k].empty()) throw Error(ErrorCode::kMalformed, "empty id in CSV header");
    if (!seen.insert(header[k]).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate id " + std::string(header[k]));
    }
    m.ids.emplace_back(header[k]);
  }
  const std::size_t n = m.ids.size();
  if (n == 0) throw Error(ErrorCode::kMalformed, "CSV has no test columns");
  if (lines.size() != n + 1) {
    throw Error(ErrorCode::kMalformed, "CSV has " + std::to_string(lines.size() - 1) +
                                           " rows for " + std::to_string(n) + " columns");
  }
  m.values.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto cells = Split(lines[i + 1], ',');
    const std::string row = "CSV row " + std::to_string(i + 1);
    if (cells.size() != n + 1) throw Error(ErrorCode::kMalformed, row + " is not " + std::to_string(n + 1) + " cells wide");
    if (cells[0] != m.ids[i]) throw Error(ErrorCode::kMalformed, row + " id does not match header");
    for (std::size_t j = 0; j < n; ++j) {
      const auto cell = cells[j + 1];
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw Error(ErrorCode::kMalformed, row + ": cell '" + std::string(cell) + "' is not a non-negative integer");
      }
      m.at(i, j) = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m.at(i, i) != 0) throw Error(ErrorCode::kMalformed, "nonzero diagonal at " + m.ids[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        throw Error(ErrorCode::kMalformed, "asymmetric cells for " + m.ids[i] + " and " + m.ids[j]);
      }
    }
  }
  return m;
}

}  // namespace divtcp::distance
