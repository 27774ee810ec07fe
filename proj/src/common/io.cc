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

#include "common/io.h"

#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "common/error.h"

namespace divtcp {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::kIoFailure, "failed reading " + path.string());
  }
  return std::move(buffer).str();
}

std::vector<std::uint8_t> ReadBinaryFile(const std::filesystem::path& path) {
  const std::string data = ReadFile(path);
  return {data.begin(), data.end()};
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error(ErrorCode::kIoFailure,
                  "cannot create " + path.parent_path().string() + ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "failed writing " + path.string());
  }
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> Split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(separator, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

std::vector<IdSetRow> ParseIdSetCsv(std::string_view text, std::string_view what) {
  std::vector<IdSetRow> rows;
  std::unordered_set<std::string> seen;
  std::size_t line_number = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_number;
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == 0) {
      throw Error(ErrorCode::kMalformed, std::string(what) + " line " +
                                             std::to_string(line_number) + ": empty id");
    }
    IdSetRow row;
    row.id = std::string(line.substr(0, comma));
    if (comma != std::string_view::npos && comma + 1 < line.size()) {
      for (std::string_view member : Split(line.substr(comma + 1), ';')) {
        if (!member.empty()) row.members.emplace_back(member);
      }
    }
    if (!seen.insert(row.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  std::string(what) + ": duplicate id '" + row.id + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace divtcp
