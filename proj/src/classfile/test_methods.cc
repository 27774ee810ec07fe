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

#include "classfile/test_methods.h"

#include <algorithm>
#include <map>

#include "common/error.h"

namespace divtcp::classfile {

bool IsTestMethod(const MethodInfo& method, const DetectionConfig& config) {
  if (method.name == "<init>" || method.name == "<clinit>") return false;
  for (const auto& annotation : method.annotations) {
    if (std::find(config.annotations.begin(), config.annotations.end(), annotation) !=
        config.annotations.end()) {
      return true;
    }
  }
  return config.match_name_prefix && method.code.has_value() &&
         method.name.starts_with(config.name_prefix);
}

std::vector<TestCase> ListTestCases(const ClassFile& cf, const DetectionConfig& config) {
  std::vector<const MethodInfo*> selected;
  std::map<std::string, std::vector<const MethodInfo*>> by_name;
  for (const auto& method : cf.methods) {
    if (!method.code || !IsTestMethod(method, config)) continue;
    selected.push_back(&method);
    by_name[method.name].push_back(&method);
  }

  const std::string owner = cf.BinaryName();
  std::vector<TestCase> out;
  out.reserve(selected.size());
  for (const MethodInfo* method : selected) {
    const auto& clash = by_name[method->name];
    std::string id = owner + "#" + method->name;
    if (clash.size() > 1) {
      if (config.duplicates == DuplicatePolicy::kReject) {
        throw Error(ErrorCode::kDuplicateIdentifier,
                    "test identifier " + id + " is ambiguous: " + clash[0]->descriptor +
                        " and " + clash[1]->descriptor);
      }
      id += method->descriptor;
    }
    TestCase tc{id, DecodeCode(method->code->bytes)};
    tc.instructions.owner = tc.id;
    out.push_back(std::move(tc));
  }
  return out;
}

}  // namespace divtcp::classfile
