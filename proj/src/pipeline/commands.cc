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

#include "pipeline/commands.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <numeric>

#include "common/error.h"
#include "common/io.h"
#include "corpus/corpus.h"
#include "distance/matrix.h"
#include "evaluate/evaluate.h"
#include "prioritize/prioritize.h"
#include "pipeline/synthetic.h"

namespace divtcp::pipeline {
namespace fs = std::filesystem;

namespace {

using corpus::ArtifactKind;
using corpus::EncodedArtifact;

void RequireFile(const std::optional<fs::path>& path, std::string_view what) {
  if (!path) throw Error(ErrorCode::kMissingInput, std::string(what) + " is required");
  std::error_code ec;
  if (!fs::exists(*path, ec)) {
    throw Error(ErrorCode::kMissingInput, std::string(what) + " not found: " + path->string());
  }
}

void CheckOptional(const std::optional<fs::path>& path, std::string_view what) {
  if (path) RequireFile(path, what);
}

std::string_view KindName(ArtifactKind kind) {
  return kind == ArtifactKind::kText ? "text" : "bytecode";
}

corpus::EncodingConfig Encoding(const RunConfig& config, bool filtered) {
  corpus::EncodingConfig enc;
  enc.mode = config.mode;
  enc.filter = filtered;
  if (filtered) enc.filter_set = config.filter.value_or(corpus::FilterSet::Semantic());
  return enc;
}

corpus::Corpus LoadSourceCorpus(const RunConfig& config) {
  CheckOptional(config.texts, "text corpus");
  CheckOptional(config.classes, "class source");
  if (!config.texts && !config.classes) {
    throw Error(ErrorCode::kMissingInput, "give --classes and/or --texts");
  }
  classfile::DetectionConfig detection;
  detection.match_name_prefix = config.name_prefix_tests;
  return corpus::LoadCorpus(config.texts, config.classes, detection);
}

void SetInputs(Report& report, const RunConfig& config, ArtifactKind kind) {
  report.Set("input.kind", KindName(kind));
  if (kind == ArtifactKind::kBytecode) {
    report.Set("input.mode", corpus::EncodingModeName(config.mode));
    report.Set("input.filter", config.FilterName());
  }
}

std::string OrderText(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    out += id;
    out += '\n';
  }
  return out;
}

std::vector<std::string> ReadOrder(const fs::path& path) {
  std::vector<std::string> ids;
  for (auto line : SplitLines(ReadFile(path))) {
    if (!line.empty()) ids.emplace_back(line);
  }
  return ids;
}

// "matrix.csv" -> "matrix.report": written by the matrix command.
fs::path SidecarReport(const fs::path& data) {
  fs::path report = data;
  report.replace_extension(".report");
  return report;
}

double MeanLength(const std::vector<EncodedArtifact>& artifacts) {
  if (artifacts.empty()) return 0;
  std::size_t total = 0;
  for (const auto& a : artifacts) total += a.tokens.size();
  return static_cast<double>(total) / static_cast<double>(artifacts.size());
}

void WriteReport(const RunConfig& config, const char* name, const Report& report) {
  WriteFile(config.out / name, report.Serialize());
}

}  // namespace

std::vector<EncodedArtifact> LoadArtifacts(const RunConfig& config) {
  const ArtifactKind kind = config.EffectiveKind();
  std::vector<EncodedArtifact> artifacts;
  if (config.encoded) {
    RequireFile(config.encoded, "encoded corpus");
    artifacts = corpus::ParseEncodedCorpus(ReadFile(*config.encoded), kind);
  } else {
    const auto loaded = LoadSourceCorpus(config);
    const auto enc = Encoding(config, config.filter.has_value());
    for (const auto& r : loaded.records) {
      if (kind == ArtifactKind::kText && r.text) artifacts.push_back(corpus::EncodeText(r));
      if (kind == ArtifactKind::kBytecode && r.instructions) {
        artifacts.push_back(corpus::EncodeBytecode(r, enc));
      }
    }
  }
  if (artifacts.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, std::string("no ") + std::string(KindName(kind)) +
                                             " artefacts in the given inputs");
  }
  return artifacts;
}

Report Extract(const RunConfig& config) {
  const auto loaded = LoadSourceCorpus(config);
  if (loaded.records.empty()) throw Error(ErrorCode::kEmptyCorpus, "no test cases found");

  std::vector<EncodedArtifact> text, full, filtered;
  const auto full_enc = Encoding(config, false);
  const auto filtered_enc = Encoding(config, true);
  for (const auto& r : loaded.records) {
    if (r.text) text.push_back(corpus::EncodeText(r));
    if (r.instructions) {
      full.push_back(corpus::EncodeBytecode(r, full_enc));
      if (config.filter) filtered.push_back(corpus::EncodeBytecode(r, filtered_enc));
    }
  }

  Report report;
  report.Set("command", "extract");
  report.Set("records", static_cast<std::uint64_t>(loaded.records.size()));
  report.Set("class_files", static_cast<std::uint64_t>(loaded.class_files));
  report.Set("text_only", static_cast<std::uint64_t>(loaded.text_only));
  report.Set("bytecode_only", static_cast<std::uint64_t>(loaded.bytecode_only));
  report.Set("warnings", static_cast<std::uint64_t>(loaded.warnings.size()));
  report.Set("mode", corpus::EncodingModeName(config.mode));
  report.Set("filter", config.FilterName());
  const auto emit = [&](const char* file, const char* key, const std::vector<EncodedArtifact>& a) {
    const std::string body = corpus::SerializeEncodedCorpus(a);
    WriteFile(config.out / file, body);
    report.Set(std::string(key) + ".records", static_cast<std::uint64_t>(a.size()));
    report.Set(std::string(key) + ".bytes", static_cast<std::uint64_t>(body.size()));
  };
  if (config.texts) emit("text.tsv", "text", text);
  if (config.classes) {
    emit("bytecode.tsv", "bytecode", full);
    if (config.filter) emit("bytecode-filtered.tsv", "bytecode_filtered", filtered);
  }
  WriteReport(config, "extract.report", report);
  return report;
}

Report Matrix(const RunConfig& config) {
  const auto artifacts = LoadArtifacts(config);
  const auto built = distance::BuildMatrix(artifacts, config.threads);
  WriteFile(config.out / "matrix.csv", distance::WriteMatrixCsv(built.matrix));

  Report report;
  report.Set("command", "matrix");
  SetInputs(report, config, config.EffectiveKind());
  report.Set("n", static_cast<std::uint64_t>(built.matrix.size()));
  report.SetReal("mean_length", MeanLength(artifacts));
  report.SetReal("timing.preparation_seconds", built.preparation_seconds);
  WriteReport(config, "matrix.report", report);
  return report;
}

Report Prioritize(const RunConfig& config) {
  Report report;
  report.Set("command", "prioritize");
  report.Set("approach", AlgorithmName(config.algorithm));
  report.Set("seed", config.seed);

  prioritize::PrioritizedOrder order;
  switch (config.algorithm) {
    case Algorithm::kLedru: {
      if (config.matrix) {
        RequireFile(config.matrix, "similarity matrix");
        order = prioritize::Ledru(distance::ReadMatrixCsv(ReadFile(*config.matrix)));
        report.Set("input.matrix", config.matrix->filename().string());
        const fs::path sidecar = SidecarReport(*config.matrix);
        if (fs::exists(sidecar)) {
          const auto prep = Report::Parse(ReadFile(sidecar)).Get("timing.preparation_seconds");
          if (prep) order.preparation_seconds = std::stod(*prep);
        }
      } else {
        const auto artifacts = LoadArtifacts(config);
        SetInputs(report, config, config.EffectiveKind());
        const auto built = distance::BuildMatrix(artifacts, config.threads);
        order = prioritize::Ledru(built.matrix);
        order.preparation_seconds = built.preparation_seconds;
      }
      break;
    }
    case Algorithm::kFastPw: {
      const auto artifacts = LoadArtifacts(config);
      SetInputs(report, config, config.EffectiveKind());
      report.Set("hashes", static_cast<std::uint64_t>(config.minhash.num_hashes));
      report.Set("bands", static_cast<std::uint64_t>(config.minhash.bands));
      report.Set("rows", static_cast<std::uint64_t>(config.minhash.rows));
      report.Set("shingle", static_cast<std::uint64_t>(config.minhash.shingle_k));
      order = prioritize::FastPw(artifacts, config.minhash, config.threads);
      break;
    }
    case Algorithm::kGreedyTotal:
    case Algorithm::kGreedyAdditional: {
      RequireFile(config.coverage, "coverage CSV");
      const auto coverage = prioritize::ParseCoverageCsv(ReadFile(*config.coverage));
      order = config.algorithm == Algorithm::kGreedyTotal ? prioritize::GreedyTotal(coverage)
                                                          : prioritize::GreedyAdditional(coverage);
      break;
    }
    case Algorithm::kRandom: {
      std::vector<std::string> ids;
      if (config.coverage) {
        RequireFile(config.coverage, "coverage CSV");
        ids = prioritize::ParseCoverageCsv(ReadFile(*config.coverage)).ids;
      } else if (config.matrix) {
        RequireFile(config.matrix, "similarity matrix");
        ids = distance::ReadMatrixCsv(ReadFile(*config.matrix)).ids;
      } else {
        for (auto& a : LoadArtifacts(config)) ids.push_back(std::move(a.id));
      }
      order = prioritize::RandomOrder(ids, config.seed);
      break;
    }
  }

  WriteFile(config.out / "order.txt", OrderText(order.ids));
  report.Set("n", static_cast<std::uint64_t>(order.ids.size()));
  report.SetReal("timing.preparation_seconds", order.preparation_seconds);
  report.SetReal("timing.prioritisation_seconds", order.prioritisation_seconds);
  WriteReport(config, "run.report", report);
  return report;
}

Report Evaluate(const RunConfig& config) {
  const fs::path order_path = config.order.value_or(config.out / "order.txt");
  RequireFile(order_path, "order file");
  CheckOptional(config.killmap, "kill map");
  CheckOptional(config.faults, "fault map");
  if (!config.killmap && !config.faults) {
    throw Error(ErrorCode::kMissingInput, "give --killmap and/or --faults");
  }
  const auto order = ReadOrder(order_path);

  std::optional<Report> run;
  const fs::path run_path = config.run_report.value_or(order_path.parent_path() / "run.report");
  if (config.run_report) RequireFile(config.run_report, "run report");
  if (fs::exists(run_path)) run = Report::Parse(ReadFile(run_path));

  Report report;
  report.Set("command", "evaluate");
  if (run && run->Get("approach")) report.Set("approach", *run->Get("approach"));
  report.Set("n", static_cast<std::uint64_t>(order.size()));

  if (config.killmap) {
    const auto kills = ParseIdSetCsv(ReadFile(*config.killmap), "kill map");
    try {
      const auto apfd = evaluate::Apfd(order, kills);
      report.SetReal("apfd", apfd.apfd);
      report.Set("m", static_cast<std::uint64_t>(apfd.m));
      report.Set("unkillable", static_cast<std::uint64_t>(apfd.unkillable));
    } catch (const Error& e) {
      // Without a fault map there is nothing else to report.
      if (e.code() != ErrorCode::kNoKillableFaults || !config.faults) throw;
      report.Set("apfd.status", ErrorCodeName(e.code()));
      report.Set("m", static_cast<std::uint64_t>(0));
      report.Set("unkillable", static_cast<std::uint64_t>(kills.size()));
    }
  }
  if (config.faults) {
    const auto faults = ParseIdSetCsv(ReadFile(*config.faults), "fault map");
    const auto positions = evaluate::FirstFaultPositions(order, faults);
    for (const auto& fp : positions) {
      const std::string key = "fault." + fp.fault_id + ".first_position";
      if (fp.position) {
        report.Set(key, static_cast<std::uint64_t>(*fp.position));
      } else {
        report.Set(key, "undetected");
      }
    }
    const auto summary = evaluate::SummarisePositions(positions);
    report.Set("faults.detected", static_cast<std::uint64_t>(summary.detected));
    report.Set("faults.undetected", static_cast<std::uint64_t>(summary.undetected));
    if (summary.flat) {
      report.SetReal("faults.median_first_position", *summary.flat);
      report.SetReal("faults.median_first_position_per_project", *summary.per_project);
    }
  }
  if (run) {
    for (const char* key : {"timing.preparation_seconds", "timing.prioritisation_seconds"}) {
      if (auto v = run->Get(key)) report.Set(key, *v);
    }
  }
  WriteReport(config, "evaluation.report", report);
  return report;
}

Report Bench(const RunConfig& config, std::ostream& table) {
  using Clock = std::chrono::steady_clock;
  SyntheticParams params = config.bench;
  params.seed = config.seed;
  const auto records = GenerateSynthetic(params);

  std::vector<EncodedArtifact> text, full, filtered;
  const auto full_enc = Encoding(config, false);
  const auto filtered_enc = Encoding(config, true);
  for (const auto& r : records) {
    text.push_back(corpus::EncodeText(r));
    full.push_back(corpus::EncodeBytecode(r, full_enc));
    filtered.push_back(corpus::EncodeBytecode(r, filtered_enc));
  }
  WriteFile(config.out / "bench-text.tsv", corpus::SerializeEncodedCorpus(text));
  WriteFile(config.out / "bench-bytecode.tsv", corpus::SerializeEncodedCorpus(full));
  WriteFile(config.out / "bench-bytecode-filtered.tsv", corpus::SerializeEncodedCorpus(filtered));

  // Fast runs take the best of `repeats`; the text matrix dominates the
  // wall time and runs once.
  const auto matrix_seconds = [&](const std::vector<EncodedArtifact>& a, unsigned runs) {
    double best = std::numeric_limits<double>::infinity();
    for (unsigned i = 0; i < runs; ++i) {
      best = std::min(best, distance::BuildMatrix(a, config.threads).preparation_seconds);
    }
    return best;
  };
  const auto signature_seconds = [&](const std::vector<EncodedArtifact>& a) {
    double best = std::numeric_limits<double>::infinity();
    for (unsigned i = 0; i < config.repeats; ++i) {
      const auto start = Clock::now();
      const auto sigs = prioritize::BuildSignatures(a, config.minhash, config.threads);
      const lsh::LshIndex index(sigs, config.minhash);
      best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
    }
    return best;
  };
  const double m_text = matrix_seconds(text, 1);
  const double m_full = matrix_seconds(full, config.repeats);
  const double m_filtered = matrix_seconds(filtered, config.repeats);
  const double s_text = signature_seconds(text);
  const double s_full = signature_seconds(full);
  const double s_filtered = signature_seconds(filtered);
  const auto ratio = [](double a, double b) { return a / std::max(b, 1e-9); };

  Report report;
  report.Set("command", "bench");
  report.Set("count", static_cast<std::uint64_t>(params.count));
  report.Set("text_length", static_cast<std::uint64_t>(params.text_length));
  report.Set("bytecode_length", static_cast<std::uint64_t>(params.bytecode_length));
  report.Set("seed", config.seed);
  report.Set("mode", corpus::EncodingModeName(config.mode));
  report.Set("filter", Encoding(config, true).filter_set.name());
  report.SetReal("text.mean_length", MeanLength(text));
  report.SetReal("bytecode.mean_length", MeanLength(full));
  report.SetReal("bytecode_filtered.mean_length", MeanLength(filtered));
  report.SetReal("timing.matrix.text_seconds", m_text);
  report.SetReal("timing.matrix.bytecode_seconds", m_full);
  report.SetReal("timing.matrix.bytecode_filtered_seconds", m_filtered);
  report.SetReal("timing.matrix.text_over_bytecode", ratio(m_text, m_full));
  report.SetReal("timing.matrix.bytecode_over_filtered", ratio(m_full, m_filtered));
  report.SetReal("timing.signatures.text_seconds", s_text);
  report.SetReal("timing.signatures.bytecode_seconds", s_full);
  report.SetReal("timing.signatures.bytecode_filtered_seconds", s_filtered);
  report.SetReal("timing.signatures.text_over_bytecode", ratio(s_text, s_full));
  report.SetReal("timing.signatures.bytecode_over_filtered", ratio(s_full, s_filtered));
  WriteReport(config, "bench.report", report);

  char line[160];
  table << "artefact           mean_len   matrix_s   signatures_s\n";
  const auto row = [&](const char* name, double len, double m, double s) {
    std::snprintf(line, sizeof line, "%-18s %8.1f %10.4f %14.4f\n", name, len, m, s);
    table << line;
  };
  row("text", MeanLength(text), m_text, s_text);
  row("bytecode", MeanLength(full), m_full, s_full);
  row("bytecode-filtered", MeanLength(filtered), m_filtered, s_filtered);
  std::snprintf(line, sizeof line, "matrix ratio text/bytecode %.1f, bytecode/filtered %.2f\n",
                ratio(m_text, m_full), ratio(m_full, m_filtered));
  table << line;
  return report;
}

Report RunCommand(const RunConfig& config, std::string_view command, std::ostream& out) {
  if (command == "extract") return Extract(config);
  if (command == "matrix") return Matrix(config);
  if (command == "prioritize") return Prioritize(config);
  if (command == "evaluate") return Evaluate(config);
  if (command == "bench") return Bench(config, out);
  throw Error(ErrorCode::kInvalidArgument, "unknown command '" + std::string(command) + "'");
}

}  // namespace divtcp::pipeline
