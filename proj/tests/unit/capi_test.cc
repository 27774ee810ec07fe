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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "divtcp/divtcp.h"

namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = DIVTCP_FIXTURES;

std::vector<uint8_t> ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(CApiTest, StatusNamesAndVersion) {
  EXPECT_STREQ(divtcp_status_name(DIVTCP_OK), "Ok");
  EXPECT_STREQ(divtcp_status_name(DIVTCP_MAGIC_MISMATCH), "MagicMismatch");
  EXPECT_STREQ(divtcp_status_name(DIVTCP_EMPTY_CORPUS), "EmptyCorpus");
  EXPECT_STREQ(divtcp_status_name(DIVTCP_INTERNAL), "Internal");
  EXPECT_STREQ(divtcp_status_name(static_cast<divtcp_status>(77)), "Unknown");
  EXPECT_GT(std::strlen(divtcp_version()), 0u);
}

TEST(CApiTest, ClassFileFigureListings) {
  const auto bytes = ReadAll(kFixtures / "classes/fig2/BigFractionFormatTest.class");
  divtcp_class* cls = nullptr;
  ASSERT_EQ(divtcp_class_parse(bytes.data(), bytes.size(), &cls), DIVTCP_OK);
  size_t count = 0;
  ASSERT_EQ(divtcp_class_test_count(cls, &count), DIVTCP_OK);
  ASSERT_EQ(count, 3u);
  bool seen = false;
  for (size_t i = 0; i < count; ++i) {
    const char* id = nullptr;
    ASSERT_EQ(divtcp_class_test_id(cls, i, &id), DIVTCP_OK);
    if (std::string(id).ends_with("#testFormatZero")) {
      char* hex = nullptr;
      ASSERT_EQ(divtcp_class_test_hex(cls, i, nullptr, "figure3", &hex), DIVTCP_OK);
      EXPECT_STREQ(hex, "59 03 04 B7 B4 B6 B8 B4 B6 B8 B1");
      divtcp_string_free(hex);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
  const char* id = nullptr;
  EXPECT_EQ(divtcp_class_test_id(cls, 99, &id), DIVTCP_BAD_INDEX);
  char* hex = nullptr;
  EXPECT_EQ(divtcp_class_test_hex(cls, 0, "bogus", nullptr, &hex), DIVTCP_INVALID_ARGUMENT);
  EXPECT_EQ(divtcp_class_test_hex(cls, 0, nullptr, "bogus", &hex), DIVTCP_INVALID_ARGUMENT);
  divtcp_class_destroy(cls);
}

TEST(CApiTest, ParseErrorsCarryStatusAndMessage) {
  const uint8_t junk[] = {0xDE, 0xAD, 0xBE, 0xEF};
  divtcp_class* cls = nullptr;
  EXPECT_EQ(divtcp_class_parse(junk, sizeof junk, &cls), DIVTCP_MAGIC_MISMATCH);
  EXPECT_EQ(cls, nullptr);
  EXPECT_GT(std::strlen(divtcp_last_error()), 0u);
  const uint8_t partial[] = {0xCA, 0xFE, 0xBA, 0xBE, 0x00};
  EXPECT_EQ(divtcp_class_parse(partial, sizeof partial, &cls), DIVTCP_TRUNCATED);
  EXPECT_EQ(divtcp_class_parse(nullptr, 0, nullptr), DIVTCP_INVALID_ARGUMENT);
}

TEST(CApiTest, LevenshteinMatrixAndOrder) {
  uint32_t d = 0;
  const char* k = "kitten";
  const char* s = "sitting";
  ASSERT_EQ(divtcp_levenshtein(reinterpret_cast<const uint8_t*>(k), 6,
                               reinterpret_cast<const uint8_t*>(s), 7, &d),
            DIVTCP_OK);
  EXPECT_EQ(d, 3u);

  divtcp_matrix* m = nullptr;
  ASSERT_EQ(divtcp_matrix_read_csv("test_id,A,B,C\nA,0,1,10\nB,1,0,2\nC,10,2,0\n", &m), DIVTCP_OK);
  size_t n = 0;
  divtcp_matrix_size(m, &n);
  EXPECT_EQ(n, 3u);
  uint32_t v = 0;
  EXPECT_EQ(divtcp_matrix_value(m, 0, 2, &v), DIVTCP_OK);
  EXPECT_EQ(v, 10u);
  EXPECT_EQ(divtcp_matrix_value(m, 3, 0, &v), DIVTCP_BAD_INDEX);
  char* csv = nullptr;
  ASSERT_EQ(divtcp_matrix_write_csv(m, &csv), DIVTCP_OK);
  EXPECT_STREQ(csv, "test_id,A,B,C\nA,0,1,10\nB,1,0,2\nC,10,2,0\n");
  divtcp_string_free(csv);

  divtcp_order* order = nullptr;
  ASSERT_EQ(divtcp_order_ledru(m, &order), DIVTCP_OK);
  std::string joined;
  divtcp_order_size(order, &n);
  for (size_t i = 0; i < n; ++i) {
    const char* id = nullptr;
    divtcp_order_id(order, i, &id);
    joined += id;
  }
  EXPECT_EQ(joined, "CAB");
  divtcp_order_destroy(order);
  divtcp_matrix_destroy(m);

  EXPECT_EQ(divtcp_matrix_read_csv("test_id,A,B\nA,0,1\nB,2,0\n", &m), DIVTCP_MALFORMED);
}

TEST(CApiTest, Apfd) {
  const char* order[] = {"t1", "t2", "t3", "t4", "t5"};
  double apfd = 0;
  ASSERT_EQ(divtcp_apfd(order, 5, "m1,t1\nm2,t3\n", &apfd), DIVTCP_OK);
  EXPECT_NEAR(apfd, 0.7, 1e-12);
  EXPECT_EQ(divtcp_apfd(order, 5, "m1,\n", &apfd), DIVTCP_NO_KILLABLE_FAULTS);
  EXPECT_EQ(divtcp_apfd(order, 5, "m1,t7\n", &apfd), DIVTCP_UNKNOWN_TEST_ID);
}

TEST(CApiTest, ConfigAndRun) {
  const fs::path out = fs::temp_directory_path() / "divtcp_capi_run";
  fs::remove_all(out);
  divtcp_config* config = nullptr;
  ASSERT_EQ(divtcp_config_create(&config), DIVTCP_OK);
  EXPECT_EQ(divtcp_config_set(config, "algo", "quantum"), DIVTCP_INVALID_ARGUMENT);
  EXPECT_EQ(divtcp_config_set(config, "warp", "1"), DIVTCP_INVALID_ARGUMENT);
  ASSERT_EQ(divtcp_config_set(config, "classes", (kFixtures / "classes/fig2").c_str()), DIVTCP_OK);
  ASSERT_EQ(divtcp_config_set(config, "algo", "fast-pw"), DIVTCP_OK);
  ASSERT_EQ(divtcp_config_set(config, "out", out.c_str()), DIVTCP_OK);
  char* report = nullptr;
  ASSERT_EQ(divtcp_run(config, "prioritize", &report, nullptr), DIVTCP_OK) << divtcp_last_error();
  EXPECT_NE(std::string(report).find("approach = fast-pw"), std::string::npos);
  divtcp_string_free(report);
  EXPECT_TRUE(fs::exists(out / "order.txt"));
  EXPECT_EQ(divtcp_run(config, "launch", nullptr, nullptr), DIVTCP_INVALID_ARGUMENT);
  EXPECT_EQ(divtcp_config_load_file(config, (out / "absent.conf").c_str()), DIVTCP_IO_FAILURE);
  divtcp_config_destroy(config);
  fs::remove_all(out);
}

}  // namespace
