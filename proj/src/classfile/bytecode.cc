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

#include "classfile/bytecode.h"

#include <sstream>

#include "classfile/byte_reader.h"
#include "classfile/opcodes.h"
#include "common/error.h"

namespace divtcp::classfile {
namespace {

void AppendBytes(std::vector<std::uint8_t>& out, std::span<const std::uint8_t> bytes) {
  out.insert(out.end(), bytes.begin(), bytes.end());
}

std::int32_t ReadS4(std::span<const std::uint8_t> bytes, std::size_t at) {
  return static_cast<std::int32_t>((std::uint32_t{bytes[at]} << 24) |
                                   (std::uint32_t{bytes[at + 1]} << 16) |
                                   (std::uint32_t{bytes[at + 2]} << 8) |
                                   std::uint32_t{bytes[at + 3]});
}

bool IsWideable(std::uint8_t opcode) {
  const OpcodeInfo* info = LookupOpcode(opcode);
  return opcode == op::kIinc || (info != nullptr && info->layout == OperandLayout::kLocalU1);
}

const OpcodeInfo& InfoOrThrow(std::uint8_t opcode, std::size_t offset) {
  const OpcodeInfo* info = LookupOpcode(opcode);
  if (info == nullptr) {
    std::ostringstream msg;
    msg << "unknown opcode 0x" << std::hex << int{opcode} << std::dec << " at offset " << offset;
    throw Error(ErrorCode::kUnknownOpcode, msg.str());
  }
  return *info;
}

}  // namespace

std::size_t Instruction::EncodedLength() const {
  const OpcodeInfo* info = LookupOpcode(opcode);
  const int pool_width = info == nullptr ? 0 : PoolOperandWidth(info->layout);
  return 1 + (wide ? 1 : 0) + padding + immediates.size() +
         cp_operands.size() * static_cast<std::size_t>(pool_width);
}

InstructionSequence DecodeCode(std::span<const std::uint8_t> code) {
  InstructionSequence sequence;
  ByteReader reader(code, ErrorCode::kTruncatedInstruction);
  while (!reader.done()) {
    Instruction ins;
    ins.offset = static_cast<std::uint32_t>(reader.position());
    ins.opcode = reader.U1();
    const OpcodeInfo* info = &InfoOrThrow(ins.opcode, ins.offset);

    if (info->layout == OperandLayout::kWide) {
      ins.wide = true;
      ins.opcode = reader.U1();
      if (!IsWideable(ins.opcode)) {
        std::ostringstream msg;
        msg << "opcode 0x" << std::hex << int{ins.opcode} << std::dec
            << " cannot follow wide at offset " << ins.offset;
        throw Error(ErrorCode::kUnknownOpcode, msg.str());
      }
      AppendBytes(ins.immediates, reader.Bytes(ins.opcode == op::kIinc ? 4 : 2));
      sequence.items.push_back(std::move(ins));
      continue;
    }

    switch (info->layout) {
      case OperandLayout::kNone:
        break;
      case OperandLayout::kLocalU1:
      case OperandLayout::kByteS1:
      case OperandLayout::kTypeU1:
        AppendBytes(ins.immediates, reader.Bytes(1));
        break;
      case OperandLayout::kShortS2:
      case OperandLayout::kBranchS2:
      case OperandLayout::kIinc:
        AppendBytes(ins.immediates, reader.Bytes(2));
        break;
      case OperandLayout::kBranchS4:
        AppendBytes(ins.immediates, reader.Bytes(4));
        break;
      case OperandLayout::kPoolU1:
        ins.cp_operands.push_back(reader.U1());
        break;
      case OperandLayout::kPoolU2:
        ins.cp_operands.push_back(reader.U2());
        break;
      case OperandLayout::kInvokeInterface:
      case OperandLayout::kInvokeDynamic:
        ins.cp_operands.push_back(reader.U2());
        AppendBytes(ins.immediates, reader.Bytes(2));
        break;
      case OperandLayout::kMultiANewArray:
        ins.cp_operands.push_back(reader.U2());
        AppendBytes(ins.immediates, reader.Bytes(1));
        break;
      case OperandLayout::kTableSwitch:
      case OperandLayout::kLookupSwitch: {
        // Operands start at the next multiple of four from the code start.
        ins.padding = static_cast<std::uint8_t>((4 - reader.position() % 4) % 4);
        reader.Skip(ins.padding);
        const std::size_t header = info->layout == OperandLayout::kTableSwitch ? 12 : 8;
        auto head = reader.Bytes(header);
        AppendBytes(ins.immediates, head);
        std::int64_t entries = 0;
        std::size_t entry_size = 4;
        if (info->layout == OperandLayout::kTableSwitch) {
          const std::int64_t low = ReadS4(head, 4);
          const std::int64_t high = ReadS4(head, 8);
          if (high < low) {
            throw Error(ErrorCode::kMalformed, "tableswitch with high < low at offset " +
                                                   std::to_string(ins.offset));
          }
          entries = high - low + 1;
        } else {
          entries = ReadS4(head, 4);
          entry_size = 8;
          if (entries < 0) {
            throw Error(ErrorCode::kMalformed, "lookupswitch with negative pair count at offset " +
                                                   std::to_string(ins.offset));
          }
        }
        if (static_cast<std::uint64_t>(entries) * entry_size > reader.remaining()) {
          throw Error(ErrorCode::kTruncatedInstruction,
                      "switch table runs past end of code at offset " + std::to_string(ins.offset));
        }
        AppendBytes(ins.immediates, reader.Bytes(static_cast<std::size_t>(entries) * entry_size));
        break;
      }
      case OperandLayout::kWide:
        break;  // handled above
    }
    sequence.items.push_back(std::move(ins));
  }
  return sequence;
}

std::string FormatInstruction(const Instruction& ins) {
  const OpcodeInfo* info = LookupOpcode(ins.opcode);
  std::ostringstream out;
  out << ins.offset << ": ";
  if (ins.wide) out << "wide ";
  if (info == nullptr) {
    out << "0x" << std::hex << int{ins.opcode};
    return out.str();
  }
  out << info->mnemonic;
  const auto& imm = ins.immediates;
  auto s2 = [&](std::size_t at) {
    return static_cast<std::int16_t>((imm[at] << 8) | imm[at + 1]);
  };
  auto u2 = [&](std::size_t at) { return (imm[at] << 8) | imm[at + 1]; };
  if (ins.wide) {
    out << ' ' << u2(0);
    if (ins.opcode == op::kIinc) out << ", " << s2(2);
    return out.str();
  }
  switch (info->layout) {
    case OperandLayout::kLocalU1:
    case OperandLayout::kTypeU1:
      out << ' ' << int{imm[0]};
      break;
    case OperandLayout::kByteS1:
      out << ' ' << int{static_cast<std::int8_t>(imm[0])};
      break;
    case OperandLayout::kShortS2:
      out << ' ' << s2(0);
      break;
    case OperandLayout::kBranchS2:
      out << ' ' << static_cast<std::int64_t>(ins.offset) + s2(0);
      break;
    case OperandLayout::kBranchS4:
      out << ' ' << static_cast<std::int64_t>(ins.offset) + ReadS4(imm, 0);
      break;
    case OperandLayout::kIinc:
      out << ' ' << int{imm[0]} << ", " << int{static_cast<std::int8_t>(imm[1])};
      break;
    case OperandLayout::kPoolU1:
    case OperandLayout::kPoolU2:
    case OperandLayout::kInvokeDynamic:
      out << " #" << ins.cp_operands[0];
      break;
    case OperandLayout::kInvokeInterface:
    case OperandLayout::kMultiANewArray:
      out << " #" << ins.cp_operands[0] << ", " << int{imm[0]};
      break;
    default:
      break;
  }
  return out.str();
}

}  // namespace divtcp::classfile
