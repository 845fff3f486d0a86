// Copyright 2026 The repattack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli/commands.h"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "cli/dataset.h"
#include "json.hpp"
#include "repattack/error.h"
#include "repattack/report.h"

namespace repattack::cli {
namespace {

std::string ReadWholeFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> ReadTexts(const std::string& path) {
  const std::string contents = ReadWholeFile(path);
  const bool jsonl = std::filesystem::path(path).extension() == ".jsonl";
  std::vector<std::string> texts;
  std::istringstream lines(contents);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!jsonl) {
      texts.push_back(line);
      continue;
    }
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      texts.push_back(j.contains("text") ? j["text"].get<std::string>()
                                         : j.at("output").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(path + ": malformed record: " + e.what());
    }
  }
  // A trailing newline does not start another record.
  if (!jsonl && !texts.empty() && texts.back().empty() && !contents.empty() &&
      contents.back() == '\n') {
    texts.pop_back();
  }
  return texts;
}

void PrintScoreLine(std::ostream& out, const std::string& label,
                    const ExampleScore& s) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-6s %8.4f %10.4f %9.4f %10.4f\n",
                label.c_str(), s.bodega, s.confusion, s.semantic, s.character);
  out << buf;
}

}  // namespace

int CmdAttack(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<DatasetRecord> records;
  std::unique_ptr<Victim> victim;
  std::unique_ptr<RephraseBackend> backend;
  std::unique_ptr<SemanticScorer> scorer;
  AttackConfig attack_config;
  try {
    config.Validate();
    if (config.out.empty()) throw PreconditionError("--out is required");
    records = LoadDataset(config.dataset);
    if (records.empty()) throw Error("dataset is empty: " + config.dataset);
    victim = MakeVictim(config.victim, config.seed, config.timeout_ms);
    backend = MakeBackend(config);
    scorer = MakeScorer(config.scorer, config.timeout_ms);
    attack_config = config.ToAttackConfig();
    for (const DatasetRecord& r : records) config.ProfileFor(r.task);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  std::vector<ExampleRecord> results(records.size());
  std::vector<std::string> failures(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      const DatasetRecord& r = records[i];
      try {
        const AttackOutcome outcome =
            RunAttack(r.text, r.label, *victim, *backend,
                      config.ProfileFor(r.task), attack_config);
        results[i] = MakeExampleRecord(r.id, r.task, r.text, outcome, *scorer);
      } catch (const std::exception& e) {
        // Scoring can fail after the attack (e.g. remote scorer down).
        ExampleRecord failed;
        failed.id = r.id;
        failed.task = r.task;
        failed.label = r.label;
        failed.input = failed.output = r.text;
        failed.errored = true;
        failed.error = e.what();
        results[i] = std::move(failed);
      }
    }
  };
  const int threads =
      std::min<int>(config.parallel, static_cast<int>(records.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ReportMeta meta;
  meta.task = config.task.empty() ? records.front().task : config.task;
  for (const DatasetRecord& r : records) {
    if (config.task.empty() && r.task != meta.task) meta.task = "MIXED";
  }
  meta.victim = victim->Identity();
  meta.attack = "rephrase-beam:" + config.prompts + ":" + backend->Identity();
  meta.scorer = scorer->Identity();
  meta.deterministic = victim->deterministic() && backend->deterministic();

  RunReport report;
  try {
    report = AggregateReport(std::move(results), meta);
    WriteReport(report, config.out);
    std::ofstream cfg(std::filesystem::path(config.out) / kConfigFile,
                      std::ios::binary | std::ios::trunc);
    cfg << config.ToJson();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  out << FormatReportTable({report});
  if (report.errored_count > 0) {
    for (const ExampleRecord& r : report.examples) {
      if (r.errored)
        err << "example " << r.id << " errored: " << r.error << "\n";
    }
    err << report.errored_count << " of " << report.examples_count
        << " examples errored; partial report written to " << config.out
        << "\n";
    return kExitPartial;
  }
  return kExitOk;
}

int CmdVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err) {
  RunReport report;
  std::unique_ptr<Victim> victim;
  try {
    report = ReadReport(options.report_dir);
    victim = MakeVictim(options.victim, options.seed, options.timeout_ms);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (victim->Identity() != report.meta.victim) {
    err << "error: victim mismatch: report was produced by \""
        << report.meta.victim << "\", got \"" << victim->Identity() << "\"\n";
    return kExitError;
  }
  int checked = 0;
  int failed = 0;
  for (const ExampleRecord& r : report.examples) {
    if (!r.success) continue;
    ++checked;
    try {
      const VictimVerdict verdict = victim->Classify(r.output);
      if (verdict.label == r.original_label) {
        ++failed;
        err << "example " << r.id << ": adversarial text no longer flips "
            << "the label (still " << verdict.label << ")\n";
      }
    } catch (const std::exception& e) {
      err << "error: example " << r.id << ": " << e.what() << "\n";
      return kExitError;
    }
  }
  out << "verified " << checked - failed << "/" << checked
      << " successful examples\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int CmdScore(const ScoreOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    const std::vector<std::string> originals = ReadTexts(options.original);
    const std::vector<std::string> attacked = ReadTexts(options.attacked);
    if (originals.size() != attacked.size()) {
      err << "error: record count mismatch (" << originals.size() << " vs "
          << attacked.size() << ")\n";
      return kExitError;
    }
    if (originals.empty()) {
      err << "error: no records to score\n";
      return kExitError;
    }
    std::unique_ptr<Victim> victim;
    if (!options.victim.empty())
      victim = MakeVictim(options.victim, options.seed);
    const std::unique_ptr<SemanticScorer> scorer = MakeScorer(options.scorer);

    char header[256];
    std::snprintf(header, sizeof(header), "%-6s %8s %10s %9s %10s\n", "Pair",
                  "BODEGA", "Confusion", "Semantic", "Character");
    out << header;
    std::vector<ExampleRecord> rows;
    for (std::size_t i = 0; i < originals.size(); ++i) {
      int confusion = 0;
      if (victim) {
        confusion = ConfusionScore(victim->Classify(originals[i]),
                                   victim->Classify(attacked[i]));
      }
      ExampleRecord row;
      row.id = std::to_string(i + 1);
      row.scores = ScorePair(originals[i], attacked[i], confusion, 0, *scorer);
      PrintScoreLine(out, row.id, row.scores);
      rows.push_back(std::move(row));
    }
    const RunReport mean = AggregateReport(std::move(rows), {});
    ExampleScore mean_score;
    mean_score.bodega = mean.bodega;
    mean_score.confusion = mean.confusion;
    mean_score.semantic = mean.semantic;
    mean_score.character = mean.character;
    PrintScoreLine(out, "mean", mean_score);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int CmdConvert(const ConvertOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    ParseTaskId(options.task);
    const std::vector<DatasetRecord> records =
        ParseTsv(ReadWholeFile(options.tsv), options.task, options.separator);
    std::ofstream file(options.out, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot write " + options.out);
    for (const DatasetRecord& r : records)
      file << DatasetRecordToJson(r) << "\n";
    out << "wrote " << records.size() << " records to " << options.out << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace repattack::cli
