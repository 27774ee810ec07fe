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

// File and line helpers shared by the readers and writers. All failures are
// reported as Error(kIoFailure).

#ifndef DIVTCP_COMMON_IO_H_
#define DIVTCP_COMMON_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace divtcp {

std::string ReadFile(const std::filesystem::path& path);
std::vector<std::uint8_t> ReadBinaryFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

// Splits on '\n', dropping one trailing '\r' per line and the empty piece
// after a final newline.
std::vector<std::string_view> SplitLines(std::string_view text);

std::vector<std::string_view> Split(std::string_view text, char separator);

// Splits "id,a;b;c" rows used by the coverage, kill map and fault map files.
// An empty second field is an empty set. Blank lines are skipped.
struct IdSetRow {
  std::string id;
  std::vector<std::string> members;
};
std::vector<IdSetRow> ParseIdSetCsv(std::string_view text, std::string_view what);

}  // namespace divtcp

#endif  // DIVTCP_COMMON_IO_H_
