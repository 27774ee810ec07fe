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

#ifndef DIVTCP_CLASSFILE_TEST_METHODS_H_
#define DIVTCP_CLASSFILE_TEST_METHODS_H_

#include <string>
#include <utility>
#include <vector>

#include "classfile/bytecode.h"
#include "classfile/class_file.h"

namespace divtcp::classfile {

// What to do when two test methods share a name (overloads).
enum class DuplicatePolicy {
  kSuffixDescriptor,  // "Cls#name(I)V" for every clashing method
  kReject,            // Error(kDuplicateIdentifier)
};

struct DetectionConfig {
  std::vector<std::string> annotations = {"Lorg/junit/Test;", "Lorg/junit/jupiter/api/Test;"};
  // JUnit 3 style: methods whose name starts with `name_prefix`.
  bool match_name_prefix = false;
  std::string name_prefix = "test";
  DuplicatePolicy duplicates = DuplicatePolicy::kSuffixDescriptor;
};

bool IsTestMethod(const MethodInfo& method, const DetectionConfig& config);

struct TestCase {
  std::string id;
  InstructionSequence instructions;
};

// Test methods with code, in declaration order, keyed "binary.Name#method".
std::vector<TestCase> ListTestCases(const ClassFile& cf, const DetectionConfig& config);

}  // namespace divtcp::classfile

#endif  // DIVTCP_CLASSFILE_TEST_METHODS_H_
