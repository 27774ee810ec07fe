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

#include "pipeline/run_config.h"

#include <array>
#include <charconv>
#include <limits>

#include "common/error.h"
#include "common/io.h"

namespace divtcp::pipeline {
namespace {

constexpr std::array<std::string_view, 26> kKeys = {
    "classes", "texts",  "encoded", "matrix",  "coverage",    "killmap",         "faults",
    "order",   "run-report", "out", "kind",    "mode",        "filter",          "algo",
    "seed",    "hashes", "bands",   "rows",    "shingle",     "threads",         "count",
    "text-length", "bytecode-length", "repeats", "name-prefix", "config"};

template <typename T>
T ParseUnsigned(std::string_view key, std::string_view value, T min = 0) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() ||
      v > std::numeric_limits<T>::max() || v < min) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(key) + " expects an integer >= " + std::to_string(min) + ", got '" +
                    std::string(value) + "'");
  }
  return static_cast<T>(v);
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw Error(ErrorCode::kInvalidArgument, std::string(key) + " expects true or false");
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "ledru") return Algorithm::kLedru;
  if (name == "fast-pw") return Algorithm::kFastPw;
  if (name == "greedy-total") return Algorithm::kGreedyTotal;
  if (name == "greedy-additional") return Algorithm::kGreedyAdditional;
  if (name == "random") return Algorithm::kRandom;
  return std::nullopt;
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kLedru: return "ledru";
    case Algorithm::kFastPw: return "fast-pw";
    case Algorithm::kGreedyTotal: return "greedy-total";
    case Algorithm::kGreedyAdditional: return "greedy-additional";
    case Algorithm::kRandom: return "random";
  }
  return "unknown";
}

void RunConfig::Set(std::string_view key, std::string_view value) {
  const auto path = [&] { return std::filesystem::path(std::string(value)); };
  if (key == "classes") {
    classes = path();
  } else if (key == "texts") {
    texts = path();
  } else if (key == "encoded") {
    encoded = path();
  } else if (key == "matrix") {
    matrix = path();
  } else if (key == "coverage") {
    coverage = path();
  } else if (key == "killmap") {
    killmap = path();
  } else if (key == "faults") {
    faults = path();
  } else if (key == "order") {
    order = path();
  } else if (key == "run-report") {
    run_report = path();
  } else if (key == "out") {
    out = path();
  } else if (key == "kind") {
    if (value == "text") {
      kind = corpus::ArtifactKind::kText;
    } else if (value == "bytecode") {
      kind = corpus::ArtifactKind::kBytecode;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "kind must be text or bytecode");
    }
  } else if (key == "mode") {
    auto parsed = corpus::ParseEncodingMode(value);
    if (!parsed) throw Error(ErrorCode::kInvalidArgument, "mode must be opcode-only or opcode-imm");
    mode = *parsed;
  } else if (key == "filter") {
    if (value == "off") {
      filter.reset();
    } else {
      filter = corpus::FilterSet::Parse(value);
    }
  } else if (key == "algo") {
    auto parsed = ParseAlgorithm(value);
    if (!parsed) {
      throw Error(ErrorCode::kInvalidArgument,
                  "algo must be ledru, fast-pw, greedy-total, greedy-additional or random");
    }
    algorithm = *parsed;
  } else if (key == "seed") {
    seed = ParseUnsigned<std::uint64_t>(key, value);
    minhash.seed = seed;
    bench.seed = seed;
  } else if (key == "hashes") {
    minhash.num_hashes = ParseUnsigned<std::uint32_t>(key, value, 1);
  } else if (key == "bands") {
    minhash.bands = ParseUnsigned<std::uint32_t>(key, value, 1);
  } else if (key == "rows") {
    minhash.rows = ParseUnsigned<std::uint32_t>(key, value, 1);
  } else if (key == "shingle") {
    minhash.shingle_k = ParseUnsigned<std::uint32_t>(key, value, 1);
  } else if (key == "threads") {
    threads = ParseUnsigned<unsigned>(key, value);
  } else if (key == "count") {
    bench.count = ParseUnsigned<std::size_t>(key, value, 1);
  } else if (key == "text-length") {
    bench.text_length = ParseUnsigned<std::size_t>(key, value, 1);
  } else if (key == "bytecode-length") {
    bench.bytecode_length = ParseUnsigned<std::size_t>(key, value, 1);
  } else if (key == "repeats") {
    repeats = ParseUnsigned<unsigned>(key, value, 1);
  } else if (key == "name-prefix") {
    name_prefix_tests = ParseBool(key, value);
  } else if (key == "config") {
    LoadFile(path());
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown setting '" + std::string(key) + "'");
  }
}

void RunConfig::LoadFile(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  std::size_t line_number = 0;
  for (auto line : SplitLines(text)) {
    ++line_number;
    line = Trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, path.string() + ":" + std::to_string(line_number) +
                                                   ": expected key = value");
    }
    auto key = Trim(line.substr(0, eq));
    auto value = Trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key == "config") {
      throw Error(ErrorCode::kInvalidArgument, "configuration files cannot include others");
    }
    Set(key, value);
  }
}

corpus::ArtifactKind RunConfig::EffectiveKind() const {
  if (kind) return *kind;
  if (texts && !classes && !encoded) return corpus::ArtifactKind::kText;
  return corpus::ArtifactKind::kBytecode;
}

std::string RunConfig::FilterName() const {
  return filter ? filter->name() : "off";
}

std::span<const std::string_view> RunConfig::Keys() {
  return kKeys;
}

}  // namespace divtcp::pipeline
