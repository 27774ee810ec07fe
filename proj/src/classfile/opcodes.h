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

// JVM opcode table (0x00 nop through 0xC9 jsr_w).

#ifndef DIVTCP_CLASSFILE_OPCODES_H_
#define DIVTCP_CLASSFILE_OPCODES_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace divtcp::classfile {

// How the bytes following an opcode are laid out.
enum class OperandLayout : std::uint8_t {
  kNone,
  kLocalU1,          // iload, astore, ret, ...
  kByteS1,           // bipush
  kTypeU1,           // newarray atype
  kShortS2,          // sipush
  kBranchS2,         // if*, goto, jsr
  kBranchS4,         // goto_w, jsr_w
  kPoolU1,           // ldc
  kPoolU2,           // ldc_w, field and method refs, new, checkcast, ...
  kIinc,             // u1 local, s1 delta
  kInvokeInterface,  // u2 pool, u1 count, u1 zero
  kInvokeDynamic,    // u2 pool, u2 zero
  kMultiANewArray,   // u2 pool, u1 dimensions
  kTableSwitch,
  kLookupSwitch,
  kWide,
};

// Coarse instruction families. Filter sets are built from these.
enum class OpcodeCategory : std::uint8_t {
  kConstant,    // aconst_null, iconst_*, lconst_*, fconst_*, dconst_*, bipush, sipush
  kLdc,         // ldc, ldc_w, ldc2_w
  kLoad,        // xload, xload_n
  kStore,       // xstore, xstore_n
  kArray,       // xaload, xastore, newarray, anewarray, arraylength, multianewarray
  kStack,       // pop, pop2, dup*, swap
  kArithmetic,  // add, sub, mul, div, rem, neg, shifts, bitwise, iinc
  kConversion,  // i2l, ..., i2s
  kComparison,  // lcmp, fcmpl, ..., dcmpg
  kBranch,      // if*, goto*, jsr*, ret, tableswitch, lookupswitch
  kReturn,      // ireturn, ..., return
  kField,       // getstatic, putstatic, getfield, putfield
  kInvoke,      // invokevirtual, invokespecial, invokestatic, invokeinterface, invokedynamic
  kObject,      // new, checkcast, instanceof, athrow, monitorenter, monitorexit
  kMisc,        // nop, wide
};

inline constexpr int kOpcodeCategoryCount = 15;

struct OpcodeInfo {
  std::string_view mnemonic;
  OperandLayout layout = OperandLayout::kNone;
  OpcodeCategory category = OpcodeCategory::kMisc;
};

// nullptr for bytes outside the defined table (0xCA and up).
const OpcodeInfo* LookupOpcode(std::uint8_t opcode);

std::string_view CategoryName(OpcodeCategory category);
std::optional<OpcodeCategory> ParseCategory(std::string_view name);

// Width in bytes of the constant-pool index this layout carries (0 if none).
int PoolOperandWidth(OperandLayout layout);

namespace op {
inline constexpr std::uint8_t kAconstNull = 0x01;
inline constexpr std::uint8_t kIconstM1 = 0x02;
inline constexpr std::uint8_t kIconst0 = 0x03;
inline constexpr std::uint8_t kIconst1 = 0x04;
inline constexpr std::uint8_t kIconst2 = 0x05;
inline constexpr std::uint8_t kDconst0 = 0x0E;
inline constexpr std::uint8_t kBipush = 0x10;
inline constexpr std::uint8_t kSipush = 0x11;
inline constexpr std::uint8_t kLdc = 0x12;
inline constexpr std::uint8_t kLdcW = 0x13;
inline constexpr std::uint8_t kLdc2W = 0x14;
inline constexpr std::uint8_t kIload = 0x15;
inline constexpr std::uint8_t kAload = 0x19;
inline constexpr std::uint8_t kAload0 = 0x2A;
inline constexpr std::uint8_t kAload1 = 0x2B;
inline constexpr std::uint8_t kAload2 = 0x2C;
inline constexpr std::uint8_t kAload3 = 0x2D;
inline constexpr std::uint8_t kAstore = 0x3A;
inline constexpr std::uint8_t kAstore1 = 0x4C;
inline constexpr std::uint8_t kAstore2 = 0x4D;
inline constexpr std::uint8_t kAstore3 = 0x4E;
inline constexpr std::uint8_t kPop = 0x57;
inline constexpr std::uint8_t kDup = 0x59;
inline constexpr std::uint8_t kIinc = 0x84;
inline constexpr std::uint8_t kGoto = 0xA7;
inline constexpr std::uint8_t kTableSwitch = 0xAA;
inline constexpr std::uint8_t kLookupSwitch = 0xAB;
inline constexpr std::uint8_t kIreturn = 0xAC;
inline constexpr std::uint8_t kReturn = 0xB1;
inline constexpr std::uint8_t kGetStatic = 0xB2;
inline constexpr std::uint8_t kPutStatic = 0xB3;
inline constexpr std::uint8_t kGetField = 0xB4;
inline constexpr std::uint8_t kPutField = 0xB5;
inline constexpr std::uint8_t kInvokeVirtual = 0xB6;
inline constexpr std::uint8_t kInvokeSpecial = 0xB7;
inline constexpr std::uint8_t kInvokeStatic = 0xB8;
inline constexpr std::uint8_t kInvokeInterface = 0xB9;
inline constexpr std::uint8_t kInvokeDynamic = 0xBA;
inline constexpr std::uint8_t kNew = 0xBB;
inline constexpr std::uint8_t kWide = 0xC4;
inline constexpr std::uint8_t kJsrW = 0xC9;
}  // namespace op

}  // namespace divtcp::classfile

#endif  // DIVTCP_CLASSFILE_OPCODES_H_
