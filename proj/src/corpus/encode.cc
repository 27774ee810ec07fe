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

#include "corpus/encode.h"

#include "classfile/opcodes.h"
#include "common/error.h"

namespace divtcp::corpus {
namespace {

constexpr char kHexDigits[] = "0123456789ABCDEF";

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::optional<EncodingMode> ParseEncodingMode(std::string_view name) {
  if (name == "opcode-only") return EncodingMode::kOpcodeOnly;
  if (name == "opcode-imm" || name == "opcode-plus-immediates") {
    return EncodingMode::kOpcodePlusImmediates;
  }
  return std::nullopt;
}

std::string_view EncodingModeName(EncodingMode mode) {
  return mode == EncodingMode::kOpcodeOnly ? "opcode-only" : "opcode-imm";
}

std::string EncodedArtifact::Payload() const {
  if (kind == ArtifactKind::kBytecode) return hex;
  return std::string(tokens.begin(), tokens.end());
}

EncodedArtifact EncodeText(const TestCaseRecord& record) {
  if (!record.text) throw Error(ErrorCode::kMissingText, "no text for " + record.id);
  EncodedArtifact out;
  out.id = record.id;
  out.kind = ArtifactKind::kText;
  const std::string& text = *record.text;
  out.tokens.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
      out.tokens.push_back(' ');
    } else if (c == '\n') {
      out.tokens.push_back(' ');
    } else {
      out.tokens.push_back(static_cast<std::uint8_t>(c));
    }
  }
  return out;
}

EncodedArtifact EncodeBytecode(const TestCaseRecord& record, const EncodingConfig& config) {
  if (!record.instructions) {
    throw Error(ErrorCode::kMissingBytecode, "no bytecode for " + record.id);
  }
  EncodedArtifact out;
  out.id = record.id;
  out.kind = ArtifactKind::kBytecode;
  const auto emit = [&](const classfile::Instruction& ins) {
    if (ins.wide) out.tokens.push_back(classfile::op::kWide);
    out.tokens.push_back(ins.opcode);
    if (config.mode == EncodingMode::kOpcodePlusImmediates) {
      out.tokens.insert(out.tokens.end(), ins.immediates.begin(), ins.immediates.end());
    }
  };
  for (const auto& ins : record.instructions->items) {
    if (!config.filter || config.filter_set.Keeps(ins.opcode)) emit(ins);
  }
  out.hex = ToHex(out.tokens);
  return out;
}

std::string ToHex(std::span<const std::uint8_t> bytes) {
  std::string out;
  out.reserve(bytes.empty() ? 0 : bytes.size() * 3 - 1);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.push_back(kHexDigits[bytes[i] >> 4]);
    out.push_back(kHexDigits[bytes[i] & 0xF]);
  }
  return out;
}

std::vector<std::uint8_t> ParseHex(std::string_view hex) {
  std::vector<std::uint8_t> out;
  if (hex.empty()) return out;
  if (hex.size() % 3 != 2) {
    throw Error(ErrorCode::kMalformed, "hex payload has length " + std::to_string(hex.size()));
  }
  out.reserve(hex.size() / 3 + 1);
  for (std::size_t i = 0; i < hex.size(); i += 3) {
    const int hi = HexValue(hex[i]);
    const int lo = HexValue(hex[i + 1]);
    if (hi < 0 || lo < 0 || (i + 2 < hex.size() && hex[i + 2] != ' ')) {
      throw Error(ErrorCode::kMalformed, "bad hex byte at column " + std::to_string(i));
    }
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

std::string EscapeField(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string UnescapeField(std::string_view escaped) {
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    if (escaped[i] != '\\') {
      out.push_back(escaped[i]);
      continue;
    }
    if (++i == escaped.size()) throw Error(ErrorCode::kMalformed, "dangling backslash");
    switch (escaped[i]) {
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 't': out.push_back('\t'); break;
      case '\\': out.push_back('\\'); break;
      default:
        throw Error(ErrorCode::kMalformed, std::string("unknown escape \\") + escaped[i]);
    }
  }
  return out;
}

}  // namespace divtcp::corpus
