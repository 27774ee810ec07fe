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

// divtcp command-line tool. Parses flags and hands them to the library as
// key/value settings; a --config file is applied first so flags override it.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "divtcp/divtcp.h"

namespace {

struct Flag {
  const char* key;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"classes", "class file or directory of compiled tests"},
    {"texts", "text corpus (id<TAB>source per line)"},
    {"encoded", "encoded corpus written by extract"},
    {"kind", "artefact kind for matrix/prioritize: text or bytecode"},
    {"mode", "bytecode encoding: opcode-only or opcode-imm"},
    {"filter", "off, semantic, figure3 or a category list"},
    {"algo", "ledru, fast-pw, greedy-total, greedy-additional or random"},
    {"matrix", "similarity matrix CSV"},
    {"coverage", "coverage CSV (test,entity;entity)"},
    {"killmap", "kill map CSV (mutant,test;test)"},
    {"faults", "fault map CSV (fault,test;test)"},
    {"order", "order file to evaluate (default OUT/order.txt)"},
    {"run-report", "run report to copy timings from"},
    {"seed", "random seed"},
    {"hashes", "MinHash signature length"},
    {"bands", "LSH bands"},
    {"rows", "LSH rows per band"},
    {"shingle", "shingle length in tokens"},
    {"threads", "matrix and signature workers (0 = all cores)"},
    {"count", "bench: number of synthetic tests"},
    {"text-length", "bench: mean text length"},
    {"bytecode-length", "bench: mean bytecode length"},
    {"repeats", "bench: timing repetitions"},
    {"name-prefix", "also treat methods named test* as tests"},
    {"out", "output directory"},
};

int Report(divtcp_status status) {
  std::fprintf(stderr, "divtcp: %s: %s\n", divtcp_status_name(status), divtcp_last_error());
  return status == DIVTCP_INTERNAL ? 70 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Similarity-based test case prioritisation over source text and JVM bytecode"};
  app.set_version_flag("--version", divtcp_version());
  app.require_subcommand(1);

  std::string config_file;
  app.add_option("--config", config_file, "key = value settings file")->check(CLI::ExistingFile);
  std::vector<std::pair<const char*, std::string>> values(std::size(kFlags));
  std::vector<CLI::Option*> options;
  for (std::size_t i = 0; i < std::size(kFlags); ++i) {
    values[i].first = kFlags[i].key;
    options.push_back(app.add_option(std::string("--") + kFlags[i].key, values[i].second,
                                     kFlags[i].help));
  }

  const char* commands[][2] = {
      {"extract", "decode tests and write encoded corpus files"},
      {"matrix", "build the pairwise edit distance matrix"},
      {"prioritize", "order the tests"},
      {"evaluate", "score an order by APFD and first fault positions"},
      {"bench", "time text and bytecode preparation on a synthetic corpus"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  CLI11_PARSE(app, argc, argv);

  divtcp_config* config = nullptr;
  if (divtcp_status s = divtcp_config_create(&config); s != DIVTCP_OK) return Report(s);
  const auto fail = [&](divtcp_status s) {
    const int code = Report(s);
    divtcp_config_destroy(config);
    return code;
  };
  if (!config_file.empty()) {
    if (divtcp_status s = divtcp_config_load_file(config, config_file.c_str()); s != DIVTCP_OK) {
      return fail(s);
    }
  }
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (options[i]->count() == 0) continue;
    divtcp_status s = divtcp_config_set(config, values[i].first, values[i].second.c_str());
    if (s != DIVTCP_OK) return fail(s);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  char* report = nullptr;
  char* table = nullptr;
  divtcp_status s = divtcp_run(config, command.c_str(), &report, &table);
  if (s != DIVTCP_OK) return fail(s);
  std::fputs(table, stdout);
  if (command != "bench") std::fputs(report, stdout);
  divtcp_string_free(report);
  divtcp_string_free(table);
  divtcp_config_destroy(config);
  return 0;
}
