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

// Reader for the parts of a JVM class file that test prioritisation needs:
// the constant pool, the method table, Code attributes and runtime-visible
// method annotations. Every other attribute is skipped by its length.

#ifndef DIVTCP_CLASSFILE_CLASS_FILE_H_
#define DIVTCP_CLASSFILE_CLASS_FILE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace divtcp::classfile {

enum class ConstantTag : std::uint8_t {
  kUnusable = 0,  // slot 0 and the upper half of long/double entries
  kUtf8 = 1,
  kInteger = 3,
  kFloat = 4,
  kLong = 5,
  kDouble = 6,
  kClass = 7,
  kString = 8,
  kFieldref = 9,
  kMethodref = 10,
  kInterfaceMethodref = 11,
  kNameAndType = 12,
  kMethodHandle = 15,
  kMethodType = 16,
  kDynamic = 17,
  kInvokeDynamic = 18,
  kModule = 19,
  kPackage = 20,
};

struct ConstantEntry {
  ConstantTag tag = ConstantTag::kUnusable;
  std::string utf8;            // kUtf8 (modified UTF-8 bytes, verbatim)
  std::uint64_t raw = 0;       // numeric payload for Integer/Float/Long/Double
  std::uint16_t first = 0;     // first index operand, if any
  std::uint16_t second = 0;    // second index operand, if any
  std::uint8_t handle_kind = 0;
};

// 1-based pool; index 0 and the second slot of 8-byte constants are
// kUnusable.
class ConstantPool {
 public:
  ConstantPool() = default;
  explicit ConstantPool(std::vector<ConstantEntry> entries) : entries_(std::move(entries)) {}

  // Number of slots including the unused slot 0 (the class file's
  // constant_pool_count).
  std::size_t slot_count() const { return entries_.size(); }

  // Throws Error(kBadIndex) unless `index` names an occupied slot.
  const ConstantEntry& At(std::uint16_t index) const;
  // As At(), additionally requiring the given tag.
  const ConstantEntry& At(std::uint16_t index, ConstantTag expected) const;

  std::string_view Utf8(std::uint16_t index) const;
  std::string_view ClassName(std::uint16_t index) const;

 private:
  std::vector<ConstantEntry> entries_;
};

struct CodeAttribute {
  std::uint16_t max_stack = 0;
  std::uint16_t max_locals = 0;
  std::vector<std::uint8_t> bytes;
};

namespace access {
inline constexpr std::uint16_t kPublic = 0x0001;
inline constexpr std::uint16_t kStatic = 0x0008;
inline constexpr std::uint16_t kNative = 0x0100;
inline constexpr std::uint16_t kAbstract = 0x0400;
}  // namespace access

struct MethodInfo {
  std::uint16_t access_flags = 0;
  std::string name;
  std::string descriptor;
  std::vector<std::string> annotations;  // type descriptors, e.g. "Lorg/junit/Test;"
  std::optional<CodeAttribute> code;
};

struct ClassFile {
  std::uint16_t minor_version = 0;
  std::uint16_t major_version = 0;
  ConstantPool constant_pool;
  std::uint16_t access_flags = 0;
  std::string this_class_name;   // internal form, e.g. "org/example/FooTest"
  std::string super_class_name;  // empty for java/lang/Object itself
  std::vector<MethodInfo> methods;
  std::vector<std::string> warnings;

  // "org.example.FooTest"
  std::string BinaryName() const;
};

// Highest major version whose layout has been checked (Java 17).
inline constexpr std::uint16_t kMaxCheckedMajorVersion = 61;

// Throws Error with kMagicMismatch, kTruncated, kBadConstantTag, kBadIndex
// or kMalformed.
ClassFile ParseClass(std::span<const std::uint8_t> bytes);

}  // namespace divtcp::classfile

#endif  // DIVTCP_CLASSFILE_CLASS_FILE_H_
