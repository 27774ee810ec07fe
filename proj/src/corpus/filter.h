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

#ifndef DIVTCP_CORPUS_FILTER_H_
#define DIVTCP_CORPUS_FILTER_H_

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "classfile/bytecode.h"
#include "classfile/opcodes.h"

namespace divtcp::corpus {

// A set of opcodes to keep. Wide-prefixed instructions are judged by the
// opcode they modify.
class FilterSet {
 public:
  // Constant pushes (including the ldc family), field access, invocations.
  static FilterSet Semantic();
  // Constant pushes without the ldc family, field access, invocations, plus
  // the dup and return opcodes.
  static FilterSet Figure3();
  static FilterSet All();
  static FilterSet FromCategories(std::initializer_list<classfile::OpcodeCategory> categories);

  // "semantic", "figure3", "all", or a comma-separated list of category
  // names, optionally prefixed with "custom:". Throws Error(kInvalidArgument).
  static FilterSet Parse(std::string_view spec);

  bool Keeps(std::uint8_t opcode) const { return keep_.test(opcode); }
  FilterSet& Add(std::uint8_t opcode);
  FilterSet& Remove(std::uint8_t opcode);
  FilterSet& AddCategory(classfile::OpcodeCategory category);
  FilterSet& RemoveCategory(classfile::OpcodeCategory category);

  const std::string& name() const { return name_; }
  bool operator==(const FilterSet& other) const { return keep_ == other.keep_; }

 private:
  std::bitset<256> keep_;
  std::string name_ = "custom";
};

classfile::InstructionSequence FilterInstructions(const classfile::InstructionSequence& sequence,
                                                  const FilterSet& filter);

}  // namespace divtcp::corpus

#endif  // DIVTCP_CORPUS_FILTER_H_
