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

#include "classfile/class_file.h"

#include <algorithm>
#include <string>

#include "classfile/byte_reader.h"
#include "common/error.h"

namespace divtcp::classfile {
namespace {

constexpr std::uint32_t kMagic = 0xCAFEBABE;

std::string TagName(ConstantTag tag) {
  return std::to_string(static_cast<int>(tag));
}

const ConstantEntry& Lookup(const std::vector<ConstantEntry>& entries, std::uint16_t index) {
  if (index == 0 || index >= entries.size() || entries[index].tag == ConstantTag::kUnusable) {
    throw Error(ErrorCode::kBadIndex, "constant pool index " + std::to_string(index) +
                                          " does not name an occupied slot (pool has " +
                                          std::to_string(entries.size()) + " slots)");
  }
  return entries[index];
}

void Expect(const std::vector<ConstantEntry>& entries, std::uint16_t index, ConstantTag tag,
            std::uint16_t from) {
  const ConstantEntry& entry = Lookup(entries, index);
  if (entry.tag != tag) {
    throw Error(ErrorCode::kBadIndex, "constant pool entry " + std::to_string(from) +
                                          " refers to #" + std::to_string(index) + " with tag " +
                                          TagName(entry.tag) + ", expected " + TagName(tag));
  }
}

std::vector<ConstantEntry> ReadPool(ByteReader& in) {
  const std::uint16_t count = in.U2();
  std::vector<ConstantEntry> entries(std::max<std::uint16_t>(count, 1));
  for (std::uint32_t i = 1; i < count; ++i) {
    ConstantEntry& e = entries[i];
    const std::uint8_t tag = in.U1();
    e.tag = static_cast<ConstantTag>(tag);
    switch (e.tag) {
      case ConstantTag::kUtf8: {
        auto bytes = in.Bytes(in.U2());
        e.utf8.assign(bytes.begin(), bytes.end());
        break;
      }
      case ConstantTag::kInteger:
      case ConstantTag::kFloat:
        e.raw = in.U4();
        break;
      case ConstantTag::kLong:
      case ConstantTag::kDouble:
        e.raw = (std::uint64_t{in.U4()} << 32) | in.U4();
        if (i + 1 >= count) {
          throw Error(ErrorCode::kBadIndex, "8-byte constant at #" + std::to_string(i) +
                                                " overflows the constant pool");
        }
        ++i;  // the following slot stays unusable
        break;
      case ConstantTag::kClass:
      case ConstantTag::kString:
      case ConstantTag::kMethodType:
      case ConstantTag::kModule:
      case ConstantTag::kPackage:
        e.first = in.U2();
        break;
      case ConstantTag::kFieldref:
      case ConstantTag::kMethodref:
      case ConstantTag::kInterfaceMethodref:
      case ConstantTag::kNameAndType:
      case ConstantTag::kDynamic:
      case ConstantTag::kInvokeDynamic:
        e.first = in.U2();
        e.second = in.U2();
        break;
      case ConstantTag::kMethodHandle:
        e.handle_kind = in.U1();
        e.first = in.U2();
        break;
      default:
        throw Error(ErrorCode::kBadConstantTag, "unrecognised constant pool tag " +
                                                    std::to_string(tag) + " at #" +
                                                    std::to_string(i));
    }
  }
  return entries;
}

// Checks that every inter-entry reference lands on a slot of a legal tag.
void ValidatePool(const std::vector<ConstantEntry>& entries) {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const ConstantEntry& e = entries[i];
    const auto from = static_cast<std::uint16_t>(i);
    switch (e.tag) {
      case ConstantTag::kClass:
      case ConstantTag::kString:
      case ConstantTag::kMethodType:
      case ConstantTag::kModule:
      case ConstantTag::kPackage:
        Expect(entries, e.first, ConstantTag::kUtf8, from);
        break;
      case ConstantTag::kFieldref:
      case ConstantTag::kMethodref:
      case ConstantTag::kInterfaceMethodref:
        Expect(entries, e.first, ConstantTag::kClass, from);
        Expect(entries, e.second, ConstantTag::kNameAndType, from);
        break;
      case ConstantTag::kNameAndType:
        Expect(entries, e.first, ConstantTag::kUtf8, from);
        Expect(entries, e.second, ConstantTag::kUtf8, from);
        break;
      case ConstantTag::kDynamic:
      case ConstantTag::kInvokeDynamic:
        // `first` indexes the BootstrapMethods attribute, not the pool.
        Expect(entries, e.second, ConstantTag::kNameAndType, from);
        break;
      case ConstantTag::kMethodHandle: {
        if (e.handle_kind < 1 || e.handle_kind > 9) {
          throw Error(ErrorCode::kMalformed, "method handle #" + std::to_string(i) +
                                                 " has reference kind " +
                                                 std::to_string(e.handle_kind));
        }
        const ConstantTag target = Lookup(entries, e.first).tag;
        const bool ok = e.handle_kind <= 4
                            ? target == ConstantTag::kFieldref
                            : target == ConstantTag::kMethodref ||
                                  target == ConstantTag::kInterfaceMethodref;
        if (!ok) {
          throw Error(ErrorCode::kBadIndex, "method handle #" + std::to_string(i) +
                                                " refers to #" + std::to_string(e.first) +
                                                " with tag " + TagName(target));
        }
        break;
      }
      default:
        break;
    }
  }
}

void SkipElementValue(ByteReader& in, const ConstantPool& pool);

void SkipAnnotationBody(ByteReader& in, const ConstantPool& pool) {
  const std::uint16_t pairs = in.U2();
  for (std::uint16_t p = 0; p < pairs; ++p) {
    pool.At(in.U2(), ConstantTag::kUtf8);
    SkipElementValue(in, pool);
  }
}

void SkipElementValue(ByteReader& in, const ConstantPool& pool) {
  const char tag = static_cast<char>(in.U1());
  switch (tag) {
    case 'B': case 'C': case 'D': case 'F': case 'I':
    case 'J': case 'S': case 'Z': case 's': case 'c':
      pool.At(in.U2());
      break;
    case 'e':
      pool.At(in.U2(), ConstantTag::kUtf8);
      pool.At(in.U2(), ConstantTag::kUtf8);
      break;
    case '@':
      pool.At(in.U2(), ConstantTag::kUtf8);
      SkipAnnotationBody(in, pool);
      break;
    case '[': {
      const std::uint16_t n = in.U2();
      for (std::uint16_t k = 0; k < n; ++k) SkipElementValue(in, pool);
      break;
    }
    default:
      throw Error(ErrorCode::kMalformed,
                  std::string("unknown annotation element tag '") + tag + "'");
  }
}

std::vector<std::string> ReadAnnotations(std::span<const std::uint8_t> body,
                                         const ConstantPool& pool) {
  ByteReader in(body, ErrorCode::kTruncated);
  std::vector<std::string> out;
  const std::uint16_t count = in.U2();
  for (std::uint16_t a = 0; a < count; ++a) {
    out.emplace_back(pool.Utf8(in.U2()));
    SkipAnnotationBody(in, pool);
  }
  if (!in.done()) throw Error(ErrorCode::kMalformed, "trailing bytes in annotation attribute");
  return out;
}

CodeAttribute ReadCode(std::span<const std::uint8_t> body, const ConstantPool& pool) {
  ByteReader in(body, ErrorCode::kTruncated);
  CodeAttribute code;
  code.max_stack = in.U2();
  code.max_locals = in.U2();
  auto bytes = in.Bytes(in.U4());
  code.bytes.assign(bytes.begin(), bytes.end());
  in.Skip(std::size_t{in.U2()} * 8);  // exception table
  const std::uint16_t attributes = in.U2();
  for (std::uint16_t a = 0; a < attributes; ++a) {
    pool.At(in.U2(), ConstantTag::kUtf8);
    in.Skip(in.U4());
  }
  if (!in.done()) throw Error(ErrorCode::kMalformed, "trailing bytes in Code attribute");
  return code;
}

void SkipMembers(ByteReader& in, const ConstantPool& pool) {
  const std::uint16_t count = in.U2();
  for (std::uint16_t f = 0; f < count; ++f) {
    in.U2();
    pool.At(in.U2(), ConstantTag::kUtf8);
    pool.At(in.U2(), ConstantTag::kUtf8);
    const std::uint16_t attributes = in.U2();
    for (std::uint16_t a = 0; a < attributes; ++a) {
      pool.At(in.U2(), ConstantTag::kUtf8);
      in.Skip(in.U4());
    }
  }
}

MethodInfo ReadMethod(ByteReader& in, const ConstantPool& pool) {
  MethodInfo m;
  m.access_flags = in.U2();
  m.name = pool.Utf8(in.U2());
  m.descriptor = pool.Utf8(in.U2());
  const std::uint16_t attributes = in.U2();
  for (std::uint16_t a = 0; a < attributes; ++a) {
    const std::string_view name = pool.Utf8(in.U2());
    auto body = in.Bytes(in.U4());
    if (name == "Code") {
      if (m.code) throw Error(ErrorCode::kMalformed, "method " + m.name + " has two Code attributes");
      m.code = ReadCode(body, pool);
    } else if (name == "RuntimeVisibleAnnotations") {
      auto found = ReadAnnotations(body, pool);
      m.annotations.insert(m.annotations.end(), found.begin(), found.end());
    }
  }
  const bool bodiless = (m.access_flags & (access::kAbstract | access::kNative)) != 0;
  if (bodiless && m.code) {
    throw Error(ErrorCode::kMalformed, "abstract or native method " + m.name + " has code");
  }
  if (!bodiless && !m.code) {
    throw Error(ErrorCode::kMalformed, "method " + m.name + m.descriptor + " has no Code attribute");
  }
  return m;
}

}  // namespace

const ConstantEntry& ConstantPool::At(std::uint16_t index) const {
  return Lookup(entries_, index);
}

const ConstantEntry& ConstantPool::At(std::uint16_t index, ConstantTag expected) const {
  const ConstantEntry& entry = Lookup(entries_, index);
  if (entry.tag != expected) {
    throw Error(ErrorCode::kBadIndex, "constant pool entry #" + std::to_string(index) +
                                          " has tag " + TagName(entry.tag) + ", expected " +
                                          TagName(expected));
  }
  return entry;
}

std::string_view ConstantPool::Utf8(std::uint16_t index) const {
  return At(index, ConstantTag::kUtf8).utf8;
}

std::string_view ConstantPool::ClassName(std::uint16_t index) const {
  return Utf8(At(index, ConstantTag::kClass).first);
}

std::string ClassFile::BinaryName() const {
  std::string name = this_class_name;
  std::replace(name.begin(), name.end(), '/', '.');
  return name;
}

ClassFile ParseClass(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || bytes[0] != 0xCA || bytes[1] != 0xFE || bytes[2] != 0xBA ||
      bytes[3] != 0xBE) {
    throw Error(ErrorCode::kMagicMismatch, "not a class file: magic is not CA FE BA BE");
  }
  ByteReader in(bytes, ErrorCode::kTruncated);
  if (in.U4() != kMagic) throw Error(ErrorCode::kMagicMismatch, "bad magic");

  ClassFile cf;
  cf.minor_version = in.U2();
  cf.major_version = in.U2();
  if (cf.major_version > kMaxCheckedMajorVersion) {
    cf.warnings.push_back("class file major version " + std::to_string(cf.major_version) +
                          " is newer than " + std::to_string(kMaxCheckedMajorVersion) +
                          "; parsed best-effort");
  }
  auto entries = ReadPool(in);
  ValidatePool(entries);
  cf.constant_pool = ConstantPool(std::move(entries));
  const ConstantPool& pool = cf.constant_pool;

  cf.access_flags = in.U2();
  cf.this_class_name = pool.ClassName(in.U2());
  if (cf.this_class_name.empty()) throw Error(ErrorCode::kMalformed, "empty this_class name");
  const std::uint16_t super = in.U2();
  if (super != 0) cf.super_class_name = pool.ClassName(super);
  const std::uint16_t interfaces = in.U2();
  for (std::uint16_t i = 0; i < interfaces; ++i) pool.ClassName(in.U2());

  SkipMembers(in, pool);  // fields
  const std::uint16_t methods = in.U2();
  cf.methods.reserve(methods);
  for (std::uint16_t i = 0; i < methods; ++i) cf.methods.push_back(ReadMethod(in, pool));

  const std::uint16_t attributes = in.U2();
  for (std::uint16_t a = 0; a < attributes; ++a) {
    pool.At(in.U2(), ConstantTag::kUtf8);
    in.Skip(in.U4());
  }
  if (!in.done()) {
    throw Error(ErrorCode::kMalformed,
                std::to_string(in.remaining()) + " trailing bytes after class attributes");
  }
  return cf;
}

}  // namespace divtcp::classfile
