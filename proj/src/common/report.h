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

#ifndef DIVTCP_COMMON_REPORT_H_
#define DIVTCP_COMMON_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divtcp {

// Flat "key = value" document. Keys keep insertion order; setting an
// existing key replaces its value in place. Wall-clock measurements live
// under the "timing." prefix so that comparisons can mask them.
class Report {
 public:
  void Set(std::string_view key, std::string_view value);
  void Set(std::string_view key, const char* value) { Set(key, std::string_view(value)); }
  void Set(std::string_view key, std::int64_t value);
  void Set(std::string_view key, std::uint64_t value);
  void Set(std::string_view key, int value) { Set(key, static_cast<std::int64_t>(value)); }
  void SetReal(std::string_view key, double value);

  std::optional<std::string> Get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string Serialize() const;
  // Same document without the timing.* keys.
  std::string SerializeWithoutTiming() const;
  static Report Parse(std::string_view text);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Shortest decimal form that reads back to the same double.
std::string FormatReal(double value);

}  // namespace divtcp

#endif  // DIVTCP_COMMON_REPORT_H_
