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

#include "corpus/filter.h"

#include "common/error.h"
#include "common/io.h"

namespace divtcp::corpus {

using classfile::OpcodeCategory;

FilterSet FilterSet::Semantic() {
  FilterSet set = FromCategories({OpcodeCategory::kConstant, OpcodeCategory::kLdc,
                                  OpcodeCategory::kField, OpcodeCategory::kInvoke});
  set.name_ = "semantic";
  return set;
}

FilterSet FilterSet::Figure3() {
  FilterSet set =
      FromCategories({OpcodeCategory::kConstant, OpcodeCategory::kField, OpcodeCategory::kInvoke});
  set.Add(classfile::op::kDup).Add(classfile::op::kReturn);
  set.name_ = "figure3";
  return set;
}

FilterSet FilterSet::All() {
  FilterSet set;
  set.keep_.set();
  set.name_ = "all";
  return set;
}

FilterSet FilterSet::FromCategories(std::initializer_list<OpcodeCategory> categories) {
  FilterSet set;
  for (auto c : categories) set.AddCategory(c);
  return set;
}

FilterSet FilterSet::Parse(std::string_view spec) {
  if (spec == "semantic") return Semantic();
  if (spec == "figure3") return Figure3();
  if (spec == "all") return All();
  if (spec.starts_with("custom:")) spec.remove_prefix(7);
  FilterSet set;
  for (auto name : Split(spec, ',')) {
    auto category = classfile::ParseCategory(name);
    if (!category) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown filter set or opcode category '" + std::string(name) + "'");
    }
    set.AddCategory(*category);
  }
  set.name_ = "custom:" + std::string(spec);
  return set;
}

FilterSet& FilterSet::Add(std::uint8_t opcode) {
  keep_.set(opcode);
  return *this;
}

FilterSet& FilterSet::Remove(std::uint8_t opcode) {
  keep_.reset(opcode);
  return *this;
}

FilterSet& FilterSet::AddCategory(OpcodeCategory category) {
  for (int op = 0; op < 256; ++op) {
    const auto* info = classfile::LookupOpcode(static_cast<std::uint8_t>(op));
    if (info != nullptr && info->category == category) keep_.set(op);
  }
  return *this;
}

FilterSet& FilterSet::RemoveCategory(OpcodeCategory category) {
  for (int op = 0; op < 256; ++op) {
    const auto* info = classfile::LookupOpcode(static_cast<std::uint8_t>(op));
    if (info != nullptr && info->category == category) keep_.reset(op);
  }
  return *this;
}

classfile::InstructionSequence FilterInstructions(const classfile::InstructionSequence& sequence,
                                                  const FilterSet& filter) {
  classfile::InstructionSequence out;
  out.owner = sequence.owner;
  for (const auto& ins : sequence.items) {
    if (filter.Keeps(ins.opcode)) out.items.push_back(ins);
  }
  return out;
}

}  // namespace divtcp::corpus
