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

#include "common/error.h"

namespace divtcp {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kMagicMismatch: return "MagicMismatch";
    case ErrorCode::kTruncated: return "Truncated";
    case ErrorCode::kBadConstantTag: return "BadConstantTag";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kUnknownOpcode: return "UnknownOpcode";
    case ErrorCode::kTruncatedInstruction: return "TruncatedInstruction";
    case ErrorCode::kDuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kMissingText: return "MissingText";
    case ErrorCode::kMissingBytecode: return "MissingBytecode";
    case ErrorCode::kMalformed: return "Malformed";
    case ErrorCode::kBadShape: return "BadShape";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNoKillableFaults: return "NoKillableFaults";
    case ErrorCode::kUnknownTestId: return "UnknownTestId";
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kMissingInput: return "MissingInput";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
  }
  return "Unknown";
}

}  // namespace divtcp
