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

#ifndef DIVTCP_CLASSFILE_BYTE_READER_H_
#define DIVTCP_CLASSFILE_BYTE_READER_H_

#include <cstdint>
#include <span>
#include <string>

#include "common/error.h"

namespace divtcp::classfile {

// Big-endian cursor over a byte span. Reads past the end throw Error with
// the code given at construction (Truncated for class files,
// TruncatedInstruction for code arrays).
class ByteReader {
 public:
  ByteReader(std::span<const std::uint8_t> data, ErrorCode overrun_code)
      : data_(data), overrun_code_(overrun_code) {}

  std::size_t position() const { return position_; }
  std::size_t remaining() const { return data_.size() - position_; }
  bool done() const { return position_ == data_.size(); }

  std::uint8_t U1() {
    Require(1);
    return data_[position_++];
  }

  std::uint16_t U2() {
    Require(2);
    const auto value = static_cast<std::uint16_t>((data_[position_] << 8) | data_[position_ + 1]);
    position_ += 2;
    return value;
  }

  std::uint32_t U4() {
    Require(4);
    const std::uint32_t value = (std::uint32_t{data_[position_]} << 24) |
                                (std::uint32_t{data_[position_ + 1]} << 16) |
                                (std::uint32_t{data_[position_ + 2]} << 8) |
                                std::uint32_t{data_[position_ + 3]};
    position_ += 4;
    return value;
  }

  std::span<const std::uint8_t> Bytes(std::size_t count) {
    Require(count);
    auto out = data_.subspan(position_, count);
    position_ += count;
    return out;
  }

  void Skip(std::size_t count) { Bytes(count); }

 private:
  void Require(std::size_t count) const {
    if (count > remaining()) {
      throw Error(overrun_code_, "need " + std::to_string(count) + " bytes at offset " +
                                     std::to_string(position_) + ", " +
                                     std::to_string(remaining()) + " left");
    }
  }

  std::span<const std::uint8_t> data_;
  std::size_t position_ = 0;
  ErrorCode overrun_code_;
};

}  // namespace divtcp::classfile

#endif  // DIVTCP_CLASSFILE_BYTE_READER_H_
