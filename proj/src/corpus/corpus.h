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

#ifndef DIVTCP_CORPUS_CORPUS_H_
#define DIVTCP_CORPUS_CORPUS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "classfile/test_methods.h"
#include "corpus/encode.h"

namespace divtcp::corpus {

struct Corpus {
  std::vector<TestCaseRecord> records;
  std::size_t class_files = 0;
  std::size_t text_only = 0;      // text ids with no matching test method
  std::size_t bytecode_only = 0;  // test methods with no matching text
  std::vector<std::string> warnings;
};

// Parses "id<TAB>escaped-text" lines. Blank lines are skipped. Throws
// Error(kMalformed) and Error(kDuplicateId).
std::vector<std::pair<std::string, std::string>> ParseTextCorpus(std::string_view contents);

// `class_source` is a .class file or a directory searched recursively (files
// visited in sorted path order). Either source may be absent, not both.
// Unmatched ids are kept and counted; they only warrant a warning when both
// sources are given. Throws Error(kMissingInput), Error(kIoFailure),
// Error(kDuplicateId) and any class-file parse error.
Corpus LoadCorpus(const std::optional<std::filesystem::path>& text_source,
                  const std::optional<std::filesystem::path>& class_source,
                  const classfile::DetectionConfig& detection = {});

// One "id<TAB>payload" line per artefact. Text payloads are escaped as in
// the text corpus; bytecode payloads are hex.
std::string SerializeEncodedCorpus(const std::vector<EncodedArtifact>& artifacts);
// Throws Error(kMalformed) and Error(kDuplicateId).
std::vector<EncodedArtifact> ParseEncodedCorpus(std::string_view contents, ArtifactKind kind);

}  // namespace divtcp::corpus

#endif  // DIVTCP_CORPUS_CORPUS_H_
