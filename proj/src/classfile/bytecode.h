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

#ifndef DIVTCP_CLASSFILE_BYTECODE_H_
#define DIVTCP_CLASSFILE_BYTECODE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace divtcp::classfile {

// One decoded instruction. Operand bytes are split by meaning: constant-pool
// indices go to cp_operands, everything else (locals, literals, branch
// offsets, switch tables, invokeinterface count) stays in immediates in
// encoded order. For wide-prefixed forms `opcode` is the modified
// instruction and `wide` is set.
struct Instruction {
  std::uint32_t offset = 0;
  std::uint8_t opcode = 0;
  bool wide = false;
  std::uint8_t padding = 0;  // tableswitch/lookupswitch alignment bytes
  std::vector<std::uint8_t> immediates;
  std::vector<std::uint16_t> cp_operands;

  // Bytes this instruction occupies in the code array.
  std::size_t EncodedLength() const;

  bool operator==(const Instruction&) const = default;
};

struct InstructionSequence {
  std::string owner;  // "binary.ClassName#method"; empty for raw decodes
  std::vector<Instruction> items;

  bool operator==(const InstructionSequence&) const = default;
};

// Decodes a Code attribute's code array. Throws Error(kUnknownOpcode) and
// Error(kTruncatedInstruction); an empty array decodes to no instructions.
InstructionSequence DecodeCode(std::span<const std::uint8_t> code);

// javap-like rendering: "0: new #8", "59: bipush 99", "1: tableswitch".
std::string FormatInstruction(const Instruction& instruction);

}  // namespace divtcp::classfile

#endif  // DIVTCP_CLASSFILE_BYTECODE_H_
