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

#ifndef DIVTCP_PIPELINE_RUN_CONFIG_H_
#define DIVTCP_PIPELINE_RUN_CONFIG_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "corpus/encode.h"
#include "corpus/filter.h"
#include "lsh/minhash.h"
#include "pipeline/synthetic.h"

namespace divtcp::pipeline {

enum class Algorithm { kLedru, kFastPw, kGreedyTotal, kGreedyAdditional, kRandom };

std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::string_view AlgorithmName(Algorithm algorithm);

// Everything a command may read. Keys accepted by Set() are the long CLI
// flag names without dashes ("classes", "text-length", ...).
struct RunConfig {
  std::optional<std::filesystem::path> classes;
  std::optional<std::filesystem::path> texts;
  std::optional<std::filesystem::path> encoded;
  std::optional<std::filesystem::path> matrix;
  std::optional<std::filesystem::path> coverage;
  std::optional<std::filesystem::path> killmap;
  std::optional<std::filesystem::path> faults;
  std::optional<std::filesystem::path> order;
  std::optional<std::filesystem::path> run_report;
  std::filesystem::path out = ".";

  // Unset: text when only a text corpus is given, bytecode otherwise.
  std::optional<corpus::ArtifactKind> kind;
  corpus::EncodingMode mode = corpus::EncodingMode::kOpcodePlusImmediates;
  std::optional<corpus::FilterSet> filter;  // unset = off
  Algorithm algorithm = Algorithm::kLedru;
  lsh::MinHashParams minhash;  // minhash.seed mirrors `seed`
  std::uint64_t seed = 1;
  unsigned threads = 1;
  SyntheticParams bench;  // bench.seed mirrors `seed`
  unsigned repeats = 3;
  bool name_prefix_tests = false;

  // Throws Error(kInvalidArgument) for unknown keys or unparsable values.
  void Set(std::string_view key, std::string_view value);

  // Reads "key = value" lines; '#' starts a comment. Throws Error(kIoFailure)
  // and Error(kInvalidArgument).
  void LoadFile(const std::filesystem::path& path);

  corpus::ArtifactKind EffectiveKind() const;
  std::string FilterName() const;

  static std::span<const std::string_view> Keys();
};

}  // namespace divtcp::pipeline

#endif  // DIVTCP_PIPELINE_RUN_CONFIG_H_
