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

#include "classfile/opcodes.h"

#include <array>

namespace divtcp::classfile {
namespace {

using L = OperandLayout;
using C = OpcodeCategory;

constexpr std::array<OpcodeInfo, 0xCA> kTable = {{
    {"nop", L::kNone, C::kMisc},                      // 0x00
    {"aconst_null", L::kNone, C::kConstant},
    {"iconst_m1", L::kNone, C::kConstant},
    {"iconst_0", L::kNone, C::kConstant},
    {"iconst_1", L::kNone, C::kConstant},
    {"iconst_2", L::kNone, C::kConstant},
    {"iconst_3", L::kNone, C::kConstant},
    {"iconst_4", L::kNone, C::kConstant},
    {"iconst_5", L::kNone, C::kConstant},
    {"lconst_0", L::kNone, C::kConstant},
    {"lconst_1", L::kNone, C::kConstant},
    {"fconst_0", L::kNone, C::kConstant},
    {"fconst_1", L::kNone, C::kConstant},
    {"fconst_2", L::kNone, C::kConstant},
    {"dconst_0", L::kNone, C::kConstant},
    {"dconst_1", L::kNone, C::kConstant},
    {"bipush", L::kByteS1, C::kConstant},             // 0x10
    {"sipush", L::kShortS2, C::kConstant},
    {"ldc", L::kPoolU1, C::kLdc},
    {"ldc_w", L::kPoolU2, C::kLdc},
    {"ldc2_w", L::kPoolU2, C::kLdc},
    {"iload", L::kLocalU1, C::kLoad},
    {"lload", L::kLocalU1, C::kLoad},
    {"fload", L::kLocalU1, C::kLoad},
    {"dload", L::kLocalU1, C::kLoad},
    {"aload", L::kLocalU1, C::kLoad},
    {"iload_0", L::kNone, C::kLoad},
    {"iload_1", L::kNone, C::kLoad},
    {"iload_2", L::kNone, C::kLoad},
    {"iload_3", L::kNone, C::kLoad},
    {"lload_0", L::kNone, C::kLoad},
    {"lload_1", L::kNone, C::kLoad},
    {"lload_2", L::kNone, C::kLoad},                  // 0x20
    {"lload_3", L::kNone, C::kLoad},
    {"fload_0", L::kNone, C::kLoad},
    {"fload_1", L::kNone, C::kLoad},
    {"fload_2", L::kNone, C::kLoad},
    {"fload_3", L::kNone, C::kLoad},
    {"dload_0", L::kNone, C::kLoad},
    {"dload_1", L::kNone, C::kLoad},
    {"dload_2", L::kNone, C::kLoad},
    {"dload_3", L::kNone, C::kLoad},
    {"aload_0", L::kNone, C::kLoad},
    {"aload_1", L::kNone, C::kLoad},
    {"aload_2", L::kNone, C::kLoad},
    {"aload_3", L::kNone, C::kLoad},
    {"iaload", L::kNone, C::kArray},
    {"laload", L::kNone, C::kArray},
    {"faload", L::kNone, C::kArray},                  // 0x30
    {"daload", L::kNone, C::kArray},
    {"aaload", L::kNone, C::kArray},
    {"baload", L::kNone, C::kArray},
    {"caload", L::kNone, C::kArray},
    {"saload", L::kNone, C::kArray},
    {"istore", L::kLocalU1, C::kStore},
    {"lstore", L::kLocalU1, C::kStore},
    {"fstore", L::kLocalU1, C::kStore},
    {"dstore", L::kLocalU1, C::kStore},
    {"astore", L::kLocalU1, C::kStore},
    {"istore_0", L::kNone, C::kStore},
    {"istore_1", L::kNone, C::kStore},
    {"istore_2", L::kNone, C::kStore},
    {"istore_3", L::kNone, C::kStore},
    {"lstore_0", L::kNone, C::kStore},
    {"lstore_1", L::kNone, C::kStore},                // 0x40
    {"lstore_2", L::kNone, C::kStore},
    {"lstore_3", L::kNone, C::kStore},
    {"fstore_0", L::kNone, C::kStore},
    {"fstore_1", L::kNone, C::kStore},
    {"fstore_2", L::kNone, C::kStore},
    {"fstore_3", L::kNone, C::kStore},
    {"dstore_0", L::kNone, C::kStore},
    {"dstore_1", L::kNone, C::kStore},
    {"dstore_2", L::kNone, C::kStore},
    {"dstore_3", L::kNone, C::kStore},
    {"astore_0", L::kNone, C::kStore},
    {"astore_1", L::kNone, C::kStore},
    {"astore_2", L::kNone, C::kStore},
    {"astore_3", L::kNone, C::kStore},
    {"iastore", L::kNone, C::kArray},
    {"lastore", L::kNone, C::kArray},                 // 0x50
    {"fastore", L::kNone, C::kArray},
    {"dastore", L::kNone, C::kArray},
    {"aastore", L::kNone, C::kArray},
    {"bastore", L::kNone, C::kArray},
    {"castore", L::kNone, C::kArray},
    {"sastore", L::kNone, C::kArray},
    {"pop", L::kNone, C::kStack},
    {"pop2", L::kNone, C::kStack},
    {"dup", L::kNone, C::kStack},
    {"dup_x1", L::kNone, C::kStack},
    {"dup_x2", L::kNone, C::kStack},
    {"dup2", L::kNone, C::kStack},
    {"dup2_x1", L::kNone, C::kStack},
    {"dup2_x2", L::kNone, C::kStack},
    {"swap", L::kNone, C::kStack},
    {"iadd", L::kNone, C::kArithmetic},               // 0x60
    {"ladd", L::kNone, C::kArithmetic},
    {"fadd", L::kNone, C::kArithmetic},
    {"dadd", L::kNone, C::kArithmetic},
    {"isub", L::kNone, C::kArithmetic},
    {"lsub", L::kNone, C::kArithmetic},
    {"fsub", L::kNone, C::kArithmetic},
    {"dsub", L::kNone, C::kArithmetic},
    {"imul", L::kNone, C::kArithmetic},
    {"lmul", L::kNone, C::kArithmetic},
    {"fmul", L::kNone, C::kArithmetic},
    {"dmul", L::kNone, C::kArithmetic},
    {"idiv", L::kNone, C::kArithmetic},
    {"ldiv", L::kNone, C::kArithmetic},
    {"fdiv", L::kNone, C::kArithmetic},
    {"ddiv", L::kNone, C::kArithmetic},
    {"irem", L::kNone, C::kArithmetic},               // 0x70
    {"lrem", L::kNone, C::kArithmetic},
    {"frem", L::kNone, C::kArithmetic},
    {"drem", L::kNone, C::kArithmetic},
    {"ineg", L::kNone, C::kArithmetic},
    {"lneg", L::kNone, C::kArithmetic},
    {"fneg", L::kNone, C::kArithmetic},
    {"dneg", L::kNone, C::kArithmetic},
    {"ishl", L::kNone, C::kArithmetic},
    {"lshl", L::kNone, C::kArithmetic},
    {"ishr", L::kNone, C::kArithmetic},
    {"lshr", L::kNone, C::kArithmetic},
    {"iushr", L::kNone, C::kArithmetic},
    {"lushr", L::kNone, C::kArithmetic},
    {"iand", L::kNone, C::kArithmetic},
    {"land", L::kNone, C::kArithmetic},
    {"ior", L::kNone, C::kArithmetic},                // 0x80
    {"lor", L::kNone, C::kArithmetic},
    {"ixor", L::kNone, C::kArithmetic},
    {"lxor", L::kNone, C::kArithmetic},
    {"iinc", L::kIinc, C::kArithmetic},
    {"i2l", L::kNone, C::kConversion},
    {"i2f", L::kNone, C::kConversion},
    {"i2d", L::kNone, C::kConversion},
    {"l2i", L::kNone, C::kConversion},
    {"l2f", L::kNone, C::kConversion},
    {"l2d", L::kNone, C::kConversion},
    {"f2i", L::kNone, C::kConversion},
    {"f2l", L::kNone, C::kConversion},
    {"f2d", L::kNone, C::kConversion},
    {"d2i", L::kNone, C::kConversion},
    {"d2l", L::kNone, C::kConversion},
    {"d2f", L::kNone, C::kConversion},                // 0x90
    {"i2b", L::kNone, C::kConversion},
    {"i2c", L::kNone, C::kConversion},
    {"i2s", L::kNone, C::kConversion},
    {"lcmp", L::kNone, C::kComparison},
    {"fcmpl", L::kNone, C::kComparison},
    {"fcmpg", L::kNone, C::kComparison},
    {"dcmpl", L::kNone, C::kComparison},
    {"dcmpg", L::kNone, C::kComparison},
    {"ifeq", L::kBranchS2, C::kBranch},
    {"ifne", L::kBranchS2, C::kBranch},
    {"iflt", L::kBranchS2, C::kBranch},
    {"ifge", L::kBranchS2, C::kBranch},
    {"ifgt", L::kBranchS2, C::kBranch},
    {"ifle", L::kBranchS2, C::kBranch},
    {"if_icmpeq", L::kBranchS2, C::kBranch},
    {"if_icmpne", L::kBranchS2, C::kBranch},          // 0xA0
    {"if_icmplt", L::kBranchS2, C::kBranch},
    {"if_icmpge", L::kBranchS2, C::kBranch},
    {"if_icmpgt", L::kBranchS2, C::kBranch},
    {"if_icmple", L::kBranchS2, C::kBranch},
    {"if_acmpeq", L::kBranchS2, C::kBranch},
    {"if_acmpne", L::kBranchS2, C::kBranch},
    {"goto", L::kBranchS2, C::kBranch},
    {"jsr", L::kBranchS2, C::kBranch},
    {"ret", L::kLocalU1, C::kBranch},
    {"tableswitch", L::kTableSwitch, C::kBranch},
    {"lookupswitch", L::kLookupSwitch, C::kBranch},
    {"ireturn", L::kNone, C::kReturn},
    {"lreturn", L::kNone, C::kReturn},
    {"freturn", L::kNone, C::kReturn},
    {"dreturn", L::kNone, C::kReturn},
    {"areturn", L::kNone, C::kReturn},                // 0xB0
    {"return", L::kNone, C::kReturn},
    {"getstatic", L::kPoolU2, C::kField},
    {"putstatic", L::kPoolU2, C::kField},
    {"getfield", L::kPoolU2, C::kField},
    {"putfield", L::kPoolU2, C::kField},
    {"invokevirtual", L::kPoolU2, C::kInvoke},
    {"invokespecial", L::kPoolU2, C::kInvoke},
    {"invokestatic", L::kPoolU2, C::kInvoke},
    {"invokeinterface", L::kInvokeInterface, C::kInvoke},
    {"invokedynamic", L::kInvokeDynamic, C::kInvoke},
    {"new", L::kPoolU2, C::kObject},
    {"newarray", L::kTypeU1, C::kArray},
    {"anewarray", L::kPoolU2, C::kArray},
    {"arraylength", L::kNone, C::kArray},
    {"athrow", L::kNone, C::kObject},
    {"checkcast", L::kPoolU2, C::kObject},            // 0xC0
    {"instanceof", L::kPoolU2, C::kObject},
    {"monitorenter", L::kNone, C::kObject},
    {"monitorexit", L::kNone, C::kObject},
    {"wide", L::kWide, C::kMisc},
    {"multianewarray", L::kMultiANewArray, C::kArray},
    {"ifnull", L::kBranchS2, C::kBranch},
    {"ifnonnull", L::kBranchS2, C::kBranch},
    {"goto_w", L::kBranchS4, C::kBranch},
    {"jsr_w", L::kBranchS4, C::kBranch},
}};

constexpr std::array<std::string_view, kOpcodeCategoryCount> kCategoryNames = {
    "constant", "ldc",    "load",  "store",  "array",  "stack",  "arithmetic", "conversion",
    "comparison", "branch", "return", "field", "invoke", "object", "misc",
};

}  // namespace

const OpcodeInfo* LookupOpcode(std::uint8_t opcode) {
  if (opcode >= kTable.size()) return nullptr;
  return &kTable[opcode];
}

std::string_view CategoryName(OpcodeCategory category) {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<OpcodeCategory> ParseCategory(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<OpcodeCategory>(i);
  }
  return std::nullopt;
}

int PoolOperandWidth(OperandLayout layout) {
  switch (layout) {
    case OperandLayout::kPoolU1:
      return 1;
    case OperandLayout::kPoolU2:
    case OperandLayout::kInvokeInterface:
    case OperandLayout::kInvokeDynamic:
    case OperandLayout::kMultiANewArray:
      return 2;
    default:
      return 0;
  }
}

}  // namespace divtcp::classfile
