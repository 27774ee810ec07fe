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

// The five pipeline commands. Each writes its data files and a report into
// RunConfig::out and returns the report.
//
//   extract     text.tsv, bytecode.tsv, bytecode-filtered.tsv, extract.report
//   matrix      matrix.csv, matrix.report
//   prioritize  order.txt, run.report
//   evaluate    evaluation.report
//   bench       bench-*.tsv, bench.report (plus a table on `out`)

#ifndef DIVTCP_PIPELINE_COMMANDS_H_
#define DIVTCP_PIPELINE_COMMANDS_H_

#include <ostream>
#include <string_view>
#include <vector>

#include "common/report.h"
#include "corpus/encode.h"
#include "pipeline/run_config.h"

namespace divtcp::pipeline {

Report Extract(const RunConfig& config);
Report Matrix(const RunConfig& config);
Report Prioritize(const RunConfig& config);
Report Evaluate(const RunConfig& config);
Report Bench(const RunConfig& config, std::ostream& table);

// Dispatches by name. Throws Error(kInvalidArgument) for an unknown command.
Report RunCommand(const RunConfig& config, std::string_view command, std::ostream& out);

// The artefacts a matrix or FAST run works on: the encoded corpus file when
// given, otherwise the records of the loaded corpus that have the needed
// side. Throws Error(kMissingInput) and Error(kEmptyCorpus).
std::vector<corpus::EncodedArtifact> LoadArtifacts(const RunConfig& config);

}  // namespace divtcp::pipeline

#endif  // DIVTCP_PIPELINE_COMMANDS_H_
