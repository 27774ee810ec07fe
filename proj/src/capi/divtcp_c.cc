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

#include "divtcp/divtcp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "classfile/class_file.h"
#include "classfile/test_methods.h"
#include "common/error.h"
#include "common/io.h"
#include "corpus/encode.h"
#include "corpus/filter.h"
#include "distance/levenshtein.h"
#include "distance/matrix.h"
#include "evaluate/evaluate.h"
#include "pipeline/commands.h"
#include "pipeline/run_config.h"
#include "prioritize/prioritize.h"

#ifndef DIVTCP_VERSION
#define DIVTCP_VERSION "0.0.0"
#endif

struct divtcp_config {
  divtcp::pipeline::RunConfig config;
};

struct divtcp_class {
  std::vector<divtcp::classfile::TestCase> tests;
};

struct divtcp_matrix {
  divtcp::distance::SimilarityMatrix matrix;
};

struct divtcp_order {
  std::vector<std::string> ids;
};

namespace {

thread_local std::string last_error;

divtcp_status Fail(divtcp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

divtcp_status InvalidArgument(const char* message) {
  return Fail(DIVTCP_INVALID_ARGUMENT, message);
}

// Runs `body`, translating exceptions into statuses.
template <typename F>
divtcp_status Guard(F&& body) {
  try {
    body();
    return DIVTCP_OK;
  } catch (const divtcp::Error& e) {
    return Fail(static_cast<divtcp_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DIVTCP_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DIVTCP_INTERNAL, e.what());
  }
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* divtcp_status_name(divtcp_status status) {
  if (status == DIVTCP_OK) return "Ok";
  if (status == DIVTCP_INTERNAL) return "Internal";
  if (status >= DIVTCP_INVALID_ARGUMENT && status <= DIVTCP_EMPTY_CORPUS) {
    return divtcp::ErrorCodeName(static_cast<divtcp::ErrorCode>(status));
  }
  return "Unknown";
}

const char* divtcp_last_error(void) { return last_error.c_str(); }

const char* divtcp_version(void) { return DIVTCP_VERSION; }

void divtcp_string_free(char* s) { std::free(s); }

divtcp_status divtcp_config_create(divtcp_config** out) {
  if (out == nullptr) return InvalidArgument("out is NULL");
  return Guard([&] { *out = new divtcp_config(); });
}

void divtcp_config_destroy(divtcp_config* config) { delete config; }

divtcp_status divtcp_config_set(divtcp_config* config, const char* key, const char* value) {
  if (config == nullptr || key == nullptr || value == nullptr) {
    return InvalidArgument("config, key and value must be non-NULL");
  }
  return Guard([&] { config->config.Set(key, value); });
}

divtcp_status divtcp_config_load_file(divtcp_config* config, const char* path) {
  if (config == nullptr || path == nullptr) return InvalidArgument("config and path must be non-NULL");
  return Guard([&] { config->config.LoadFile(path); });
}

divtcp_status divtcp_run(const divtcp_config* config, const char* command, char** report,
                         char** table) {
  if (config == nullptr || command == nullptr) {
    return InvalidArgument("config and command must be non-NULL");
  }
  return Guard([&] {
    std::ostringstream text;
    const auto result = divtcp::pipeline::RunCommand(config->config, command, text);
    char* report_copy = report != nullptr ? Duplicate(result.Serialize()) : nullptr;
    if (table != nullptr) {
      try {
        *table = Duplicate(text.str());
      } catch (...) {
        std::free(report_copy);
        throw;
      }
    }
    if (report != nullptr) *report = report_copy;
  });
}

divtcp_status divtcp_class_parse(const uint8_t* bytes, size_t size, divtcp_class** out) {
  if ((bytes == nullptr && size > 0) || out == nullptr) {
    return InvalidArgument("bytes and out must be non-NULL");
  }
  return Guard([&] {
    const auto cf = divtcp::classfile::ParseClass({bytes, size});
    auto cls = std::make_unique<divtcp_class>();
    cls->tests = divtcp::classfile::ListTestCases(cf, {});
    *out = cls.release();
  });
}

void divtcp_class_destroy(divtcp_class* cls) { delete cls; }

divtcp_status divtcp_class_test_count(const divtcp_class* cls, size_t* out) {
  if (cls == nullptr || out == nullptr) return InvalidArgument("cls and out must be non-NULL");
  *out = cls->tests.size();
  return DIVTCP_OK;
}

divtcp_status divtcp_class_test_id(const divtcp_class* cls, size_t index, const char** out) {
  if (cls == nullptr || out == nullptr) return InvalidArgument("cls and out must be non-NULL");
  if (index >= cls->tests.size()) return Fail(DIVTCP_BAD_INDEX, "test index out of range");
  *out = cls->tests[index].id.c_str();
  return DIVTCP_OK;
}

divtcp_status divtcp_class_test_hex(const divtcp_class* cls, size_t index, const char* mode,
                                    const char* filter, char** out) {
  if (cls == nullptr || out == nullptr) return InvalidArgument("cls and out must be non-NULL");
  if (index >= cls->tests.size()) return Fail(DIVTCP_BAD_INDEX, "test index out of range");
  return Guard([&] {
    divtcp::corpus::EncodingConfig enc;
    if (mode != nullptr) {
      const auto parsed = divtcp::corpus::ParseEncodingMode(mode);
      if (!parsed) {
        throw divtcp::Error(divtcp::ErrorCode::kInvalidArgument,
                            std::string("unknown encoding mode '") + mode + "'");
      }
      enc.mode = *parsed;
    }
    if (filter != nullptr) {
      enc.filter = true;
      enc.filter_set = divtcp::corpus::FilterSet::Parse(filter);
    }
    const auto& test = cls->tests[index];
    divtcp::corpus::TestCaseRecord record{test.id, std::nullopt, test.instructions};
    *out = Duplicate(divtcp::corpus::EncodeBytecode(record, enc).hex);
  });
}

divtcp_status divtcp_levenshtein(const uint8_t* a, size_t a_size, const uint8_t* b,
                                 size_t b_size, uint32_t* out) {
  if ((a == nullptr && a_size > 0) || (b == nullptr && b_size > 0) || out == nullptr) {
    return InvalidArgument("sequences and out must be non-NULL");
  }
  return Guard([&] { *out = divtcp::distance::Levenshtein({a, a_size}, {b, b_size}); });
}

divtcp_status divtcp_matrix_read_csv(const char* csv, divtcp_matrix** out) {
  if (csv == nullptr || out == nullptr) return InvalidArgument("csv and out must be non-NULL");
  return Guard([&] {
    auto m = std::make_unique<divtcp_matrix>();
    m->matrix = divtcp::distance::ReadMatrixCsv(csv);
    *out = m.release();
  });
}

void divtcp_matrix_destroy(divtcp_matrix* matrix) { delete matrix; }

divtcp_status divtcp_matrix_size(const divtcp_matrix* matrix, size_t* out) {
  if (matrix == nullptr || out == nullptr) return InvalidArgument("matrix and out must be non-NULL");
  *out = matrix->matrix.size();
  return DIVTCP_OK;
}

divtcp_status divtcp_matrix_value(const divtcp_matrix* matrix, size_t i, size_t j,
                                  uint32_t* out) {
  if (matrix == nullptr || out == nullptr) return InvalidArgument("matrix and out must be non-NULL");
  const size_t n = matrix->matrix.size();
  if (i >= n || j >= n) return Fail(DIVTCP_BAD_INDEX, "matrix index out of range");
  *out = matrix->matrix.at(i, j);
  return DIVTCP_OK;
}

divtcp_status divtcp_matrix_id(const divtcp_matrix* matrix, size_t i, const char** out) {
  if (matrix == nullptr || out == nullptr) return InvalidArgument("matrix and out must be non-NULL");
  if (i >= matrix->matrix.size()) return Fail(DIVTCP_BAD_INDEX, "matrix index out of range");
  *out = matrix->matrix.ids[i].c_str();
  return DIVTCP_OK;
}

divtcp_status divtcp_matrix_write_csv(const divtcp_matrix* matrix, char** out) {
  if (matrix == nullptr || out == nullptr) return InvalidArgument("matrix and out must be non-NULL");
  return Guard([&] { *out = Duplicate(divtcp::distance::WriteMatrixCsv(matrix->matrix)); });
}

divtcp_status divtcp_order_ledru(const divtcp_matrix* matrix, divtcp_order** out) {
  if (matrix == nullptr || out == nullptr) return InvalidArgument("matrix and out must be non-NULL");
  return Guard([&] {
    auto order = std::make_unique<divtcp_order>();
    order->ids = divtcp::prioritize::Ledru(matrix->matrix).ids;
    *out = order.release();
  });
}

void divtcp_order_destroy(divtcp_order* order) { delete order; }

divtcp_status divtcp_order_size(const divtcp_order* order, size_t* out) {
  if (order == nullptr || out == nullptr) return InvalidArgument("order and out must be non-NULL");
  *out = order->ids.size();
  return DIVTCP_OK;
}

divtcp_status divtcp_order_id(const divtcp_order* order, size_t index, const char** out) {
  if (order == nullptr || out == nullptr) return InvalidArgument("order and out must be non-NULL");
  if (index >= order->ids.size()) return Fail(DIVTCP_BAD_INDEX, "order index out of range");
  *out = order->ids[index].c_str();
  return DIVTCP_OK;
}

divtcp_status divtcp_apfd(const char* const* order, size_t n, const char* killmap_csv,
                          double* out) {
  if ((order == nullptr && n > 0) || killmap_csv == nullptr || out == nullptr) {
    return InvalidArgument("order, killmap_csv and out must be non-NULL");
  }
  return Guard([&] {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (order[i] == nullptr) {
        throw divtcp::Error(divtcp::ErrorCode::kInvalidArgument, "NULL id in order");
      }
      ids.emplace_back(order[i]);
    }
    const auto kills = divtcp::ParseIdSetCsv(killmap_csv, "kill map");
    *out = divtcp::evaluate::Apfd(ids, kills).apfd;
  });
}

}  // extern "C"
