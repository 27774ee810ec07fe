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

#ifndef DIVTCP_CORPUS_ENCODE_H_
#define DIVTCP_CORPUS_ENCODE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "classfile/bytecode.h"
#include "corpus/filter.h"

namespace divtcp::corpus {

struct TestCaseRecord {
  std::string id;
  std::optional<std::string> text;
  std::optional<classfile::InstructionSequence> instructions;
};

enum class EncodingMode {
  kOpcodeOnly,
  kOpcodePlusImmediates,  // constant-pool index bytes are always dropped
};

struct EncodingConfig {
  EncodingMode mode = EncodingMode::kOpcodePlusImmediates;
  bool filter = false;
  FilterSet filter_set = FilterSet::Semantic();
};

// "opcode-only" / "opcode-imm".
std::optional<EncodingMode> ParseEncodingMode(std::string_view name);
std::string_view EncodingModeName(EncodingMode mode);

enum class ArtifactKind { kText, kBytecode };

// Tokens are bytes in both cases: UTF-8 code units for text, instruction
// bytes for bytecode.
struct EncodedArtifact {
  std::string id;
  ArtifactKind kind = ArtifactKind::kBytecode;
  std::vector<std::uint8_t> tokens;
  std::string hex;  // bytecode only

  // Text as a string, or the hex rendering.
  std::string Payload() const;
};

// Replaces each line break ("\r\n", "\n" or "\r") by one space. Throws
// Error(kMissingText).
EncodedArtifact EncodeText(const TestCaseRecord& record);

// Throws Error(kMissingBytecode). A wide-prefixed instruction contributes
// the wide opcode and then the opcode it modifies.
EncodedArtifact EncodeBytecode(const TestCaseRecord& record, const EncodingConfig& config);

// "BB 59 B1": uppercase, two digits, single spaces.
std::string ToHex(std::span<const std::uint8_t> bytes);
// Inverse of ToHex. Throws Error(kMalformed).
std::vector<std::uint8_t> ParseHex(std::string_view hex);

// Backslash escapes for one-record-per-line files: \n, \r, \t, \\.
std::string EscapeField(std::string_view raw);
// Throws Error(kMalformed) on a dangling or unknown escape.
std::string UnescapeField(std::string_view escaped);

}  // namespace divtcp::corpus

#endif  // DIVTCP_CORPUS_ENCODE_H_
