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

#include "common/report.h"

#include <charconv>
#include <cmath>

#include "common/error.h"
#include "common/io.h"

namespace divtcp {
namespace {

constexpr std::string_view kTimingPrefix = "timing.";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string FormatReal(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

void Report::Set(std::string_view key, std::string_view value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::string(value);
      return;
    }
  }
  entries_.emplace_back(std::string(key), std::string(value));
}

void Report::Set(std::string_view key, std::int64_t value) { Set(key, std::to_string(value)); }

void Report::Set(std::string_view key, std::uint64_t value) { Set(key, std::to_string(value)); }

void Report::SetReal(std::string_view key, double value) { Set(key, FormatReal(value)); }

std::optional<std::string> Report::Get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string Report::Serialize() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

std::string Report::SerializeWithoutTiming() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    if (std::string_view(k).starts_with(kTimingPrefix)) continue;
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

Report Report::Parse(std::string_view text) {
  Report report;
  std::size_t line_number = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_number;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kMalformed,
                  "report line " + std::to_string(line_number) + ": expected key = value");
    }
    report.Set(Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
  }
  return report;
}

}  // namespace divtcp
