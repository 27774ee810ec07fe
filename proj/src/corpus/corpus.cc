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

#include "corpus/corpus.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "classfile/class_file.h"
#include "common/error.h"
#include "common/io.h"

namespace divtcp::corpus {
namespace fs = std::filesystem;

namespace {

std::pair<std::string_view, std::string_view> SplitRecord(std::string_view line,
                                                          std::size_t line_number) {
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos || tab == 0) {
    throw Error(ErrorCode::kMalformed,
                "line " + std::to_string(line_number) + ": expected id<TAB>payload");
  }
  return {line.substr(0, tab), line.substr(tab + 1)};
}

std::vector<fs::path> ClassFilesUnder(const fs::path& source) {
  std::error_code ec;
  if (!fs::exists(source, ec)) {
    throw Error(ErrorCode::kIoFailure, "class source does not exist: " + source.string());
  }
  if (!fs::is_directory(source, ec)) return {source};
  std::vector<fs::path> files;
  fs::recursive_directory_iterator it(source, ec), end;
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot list " + source.string() + ": " + ec.message());
  for (; it != end; it.increment(ec)) {
    if (ec) throw Error(ErrorCode::kIoFailure, "cannot list " + source.string() + ": " + ec.message());
    if (it->is_regular_file() && it->path().extension() == ".class") files.push_back(it->path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> ParseTextCorpus(std::string_view contents) {
  std::vector<std::pair<std::string, std::string>> out;
  std::unordered_set<std::string> seen;
  std::size_t line_number = 0;
  for (auto line : SplitLines(contents)) {
    ++line_number;
    if (line.empty()) continue;
    auto [id, payload] = SplitRecord(line, line_number);
    if (!seen.emplace(id).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate text id " + std::string(id));
    }
    out.emplace_back(std::string(id), UnescapeField(payload));
  }
  return out;
}

Corpus LoadCorpus(const std::optional<fs::path>& text_source,
                  const std::optional<fs::path>& class_source,
                  const classfile::DetectionConfig& detection) {
  if (!text_source && !class_source) {
    throw Error(ErrorCode::kMissingInput, "no text corpus or class source given");
  }
  Corpus corpus;
  std::unordered_map<std::string, std::size_t> index;

  if (class_source) {
    for (const auto& file : ClassFilesUnder(*class_source)) {
      ++corpus.class_files;
      classfile::ClassFile cf;
      try {
        cf = classfile::ParseClass(ReadBinaryFile(file));
      } catch (const Error& e) {
        throw Error(e.code(), file.string() + ": " + e.what());
      }
      for (const auto& w : cf.warnings) corpus.warnings.push_back(file.string() + ": " + w);
      for (auto& tc : classfile::ListTestCases(cf, detection)) {
        if (!index.emplace(tc.id, corpus.records.size()).second) {
          throw Error(ErrorCode::kDuplicateId, "test " + tc.id + " found in more than one class file");
        }
        corpus.records.push_back({tc.id, std::nullopt, std::move(tc.instructions)});
      }
    }
  }

  std::size_t matched = 0;
  if (text_source) {
    for (auto& [id, text] : ParseTextCorpus(ReadFile(*text_source))) {
      auto found = index.find(id);
      if (found != index.end()) {
        corpus.records[found->second].text = std::move(text);
        ++matched;
        continue;
      }
      ++corpus.text_only;
      if (class_source) corpus.warnings.push_back("text id without test method: " + id);
      corpus.records.push_back({id, std::move(text), std::nullopt});
    }
  }

  if (class_source) {
    corpus.bytecode_only = index.size() - matched;
    if (text_source) {
      for (const auto& r : corpus.records) {
        if (r.instructions && !r.text) corpus.warnings.push_back("test method without text: " + r.id);
      }
    }
  }
  return corpus;
}

std::string SerializeEncodedCorpus(const std::vector<EncodedArtifact>& artifacts) {
  std::string out;
  for (const auto& a : artifacts) {
    out += a.id;
    out += '\t';
    out += a.kind == ArtifactKind::kText ? EscapeField(a.Payload()) : a.hex;
    out += '\n';
  }
  return out;
}

std::vector<EncodedArtifact> ParseEncodedCorpus(std::string_view contents, ArtifactKind kind) {
  std::vector<EncodedArtifact> out;
  std::unordered_set<std::string> seen;
  std::size_t line_number = 0;
  for (auto line : SplitLines(contents)) {
    ++line_number;
    if (line.empty()) continue;
    auto [id, payload] = SplitRecord(line, line_number);
    EncodedArtifact a;
    a.id = std::string(id);
    a.kind = kind;
    if (!seen.insert(a.id).second) throw Error(ErrorCode::kDuplicateId, "duplicate id " + a.id);
    if (kind == ArtifactKind::kText) {
      const std::string text = UnescapeField(payload);
      a.tokens.assign(text.begin(), text.end());
    } else {
      a.tokens = ParseHex(payload);
      a.hex = ToHex(a.tokens);
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace divtcp::corpus
