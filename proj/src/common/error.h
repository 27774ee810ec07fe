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

#ifndef DIVTCP_COMMON_ERROR_H_
#define DIVTCP_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace divtcp {

// Every failure the library reports. The C API maps these one-to-one onto
// divtcp_status values, so the order here is part of the ABI.
enum class ErrorCode {
  kInvalidArgument = 1,
  kIoFailure,
  kMagicMismatch,
  kTruncated,
  kBadConstantTag,
  kBadIndex,
  kUnknownOpcode,
  kTruncatedInstruction,
  kDuplicateIdentifier,
  kDuplicateId,
  kMissingText,
  kMissingBytecode,
  kMalformed,
  kBadShape,
  kEmptyInput,
  kNoKillableFaults,
  kUnknownTestId,
  kEmptySample,
  kMissingInput,
  kEmptyMatrix,
  kEmptyCorpus,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace divtcp

#endif  // DIVTCP_COMMON_ERROR_H_
