/*
 * Copyright 2026 The divtcp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libdivtcp.
 *
 * Every function returns a divtcp_status. On failure the calling thread's
 * divtcp_last_error() holds a human-readable message until the next call
 * that fails. Handles are opaque and owned by the caller; strings returned
 * through `char**` must be released with divtcp_string_free(). Borrowed
 * `const char*` results stay valid until the owning handle is destroyed.
 */

#ifndef DIVTCP_DIVTCP_H_
#define DIVTCP_DIVTCP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DIVTCP_API __declspec(dllexport)
#else
#define DIVTCP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum divtcp_status {
  DIVTCP_OK = 0,
  DIVTCP_INVALID_ARGUMENT = 1,
  DIVTCP_IO_FAILURE = 2,
  DIVTCP_MAGIC_MISMATCH = 3,
  DIVTCP_TRUNCATED = 4,
  DIVTCP_BAD_CONSTANT_TAG = 5,
  DIVTCP_BAD_INDEX = 6,
  DIVTCP_UNKNOWN_OPCODE = 7,
  DIVTCP_TRUNCATED_INSTRUCTION = 8,
  DIVTCP_DUPLICATE_IDENTIFIER = 9,
  DIVTCP_DUPLICATE_ID = 10,
  DIVTCP_MISSING_TEXT = 11,
  DIVTCP_MISSING_BYTECODE = 12,
  DIVTCP_MALFORMED = 13,
  DIVTCP_BAD_SHAPE = 14,
  DIVTCP_EMPTY_INPUT = 15,
  DIVTCP_NO_KILLABLE_FAULTS = 16,
  DIVTCP_UNKNOWN_TEST_ID = 17,
  DIVTCP_EMPTY_SAMPLE = 18,
  DIVTCP_MISSING_INPUT = 19,
  DIVTCP_EMPTY_MATRIX = 20,
  DIVTCP_EMPTY_CORPUS = 21,
  DIVTCP_INTERNAL = 100
} divtcp_status;

/* "Ok", "MagicMismatch", ...; never NULL. */
DIVTCP_API const char* divtcp_status_name(divtcp_status status);
/* Message of the calling thread's last failure, "" if none. */
DIVTCP_API const char* divtcp_last_error(void);
DIVTCP_API const char* divtcp_version(void);
DIVTCP_API void divtcp_string_free(char* s);

/* Run configuration; keys are the long CLI option names ("classes", "algo"). */
typedef struct divtcp_config divtcp_config;

DIVTCP_API divtcp_status divtcp_config_create(divtcp_config** out);
DIVTCP_API void divtcp_config_destroy(divtcp_config* config);
DIVTCP_API divtcp_status divtcp_config_set(divtcp_config* config, const char* key,
                                           const char* value);
DIVTCP_API divtcp_status divtcp_config_load_file(divtcp_config* config, const char* path);

/*
 * Runs "extract", "matrix", "prioritize", "evaluate" or "bench". The
 * serialized report is returned in *report (may be NULL); bench also
 * returns its table in *table (may be NULL).
 */
DIVTCP_API divtcp_status divtcp_run(const divtcp_config* config, const char* command,
                                    char** report, char** table);

/* A parsed class file and its detected test methods. */
typedef struct divtcp_class divtcp_class;

DIVTCP_API divtcp_status divtcp_class_parse(const uint8_t* bytes, size_t size,
                                            divtcp_class** out);
DIVTCP_API void divtcp_class_destroy(divtcp_class* cls);
DIVTCP_API divtcp_status divtcp_class_test_count(const divtcp_class* cls, size_t* out);
DIVTCP_API divtcp_status divtcp_class_test_id(const divtcp_class* cls, size_t index,
                                              const char** out);
/* Upper-case hex of the test's bytecode encoding. `filter` is NULL for the
 * unfiltered form, else a filter name ("semantic", "figure3", ...). */
DIVTCP_API divtcp_status divtcp_class_test_hex(const divtcp_class* cls, size_t index,
                                               const char* mode, const char* filter,
                                               char** out);

DIVTCP_API divtcp_status divtcp_levenshtein(const uint8_t* a, size_t a_size, const uint8_t* b,
                                            size_t b_size, uint32_t* out);

/* Symmetric pairwise distance matrix. */
typedef struct divtcp_matrix divtcp_matrix;

DIVTCP_API divtcp_status divtcp_matrix_read_csv(const char* csv, divtcp_matrix** out);
DIVTCP_API void divtcp_matrix_destroy(divtcp_matrix* matrix);
DIVTCP_API divtcp_status divtcp_matrix_size(const divtcp_matrix* matrix, size_t* out);
DIVTCP_API divtcp_status divtcp_matrix_value(const divtcp_matrix* matrix, size_t i, size_t j,
                                             uint32_t* out);
DIVTCP_API divtcp_status divtcp_matrix_id(const divtcp_matrix* matrix, size_t i,
                                          const char** out);
DIVTCP_API divtcp_status divtcp_matrix_write_csv(const divtcp_matrix* matrix, char** out);

/* A prioritised order of test ids. */
typedef struct divtcp_order divtcp_order;

DIVTCP_API divtcp_status divtcp_order_ledru(const divtcp_matrix* matrix, divtcp_order** out);
DIVTCP_API void divtcp_order_destroy(divtcp_order* order);
DIVTCP_API divtcp_status divtcp_order_size(const divtcp_order* order, size_t* out);
DIVTCP_API divtcp_status divtcp_order_id(const divtcp_order* order, size_t index,
                                         const char** out);

/* APFD of `order` (n ids) against a kill map CSV ("mutant,test;test"). */
DIVTCP_API divtcp_status divtcp_apfd(const char* const* order, size_t n, const char* killmap_csv,
                                     double* out);

#ifdef __cplusplus
}
#endif

#endif /* DIVTCP_DIVTCP_H_ */
