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
#ifndef REPATTACK_REPORT_H_
#define REPATTACK_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "repattack/attack_engine.h"
#include "repattack/evaluation.h"

namespace repattack {

// One line of examples.jsonl.
struct ExampleRecord {
  std::string id;
  std::string task;
  int label = 0;           // dataset label
  int original_label = 0;  // victim's prediction on the input
  int final_label = 0;     // victim's prediction on the output
  std::string input;
  std::string output;  // adversarial text on success, else the input
  bool success = false;
  bool errored = false;
  std::string error;
  int restarts = 0;
  ExampleScore scores;
  std::vector<TraceEntry> trace;
};

// Scores an attack outcome. Failed and errored attacks are scored against
// the unmodified input (confusion 0).
ExampleRecord MakeExampleRecord(std::string id, std::string task,
                                std::string_view input,
                                const AttackOutcome& outcome,
                                SemanticScorer& scorer);

struct ReportMeta {
  std::string task;
  std::string victim;
  std::string attack;
  std::string scorer;
  // False when a generative backend or remote victim was involved.
  bool deterministic = true;
};

struct RunReport {
  ReportMeta meta;
  double bodega = 0.0;
  double confusion = 0.0;
  double semantic = 0.0;
  double character = 0.0;
  double queries = 0.0;
  int examples_count = 0;
  int errored_count = 0;
  std::vector<ExampleRecord> examples;
};

// Arithmetic means over `examples`. Throws PreconditionError when empty.
RunReport AggregateReport(std::vector<ExampleRecord> examples, ReportMeta meta);

std::string ExampleRecordToJson(const ExampleRecord& record);
// Throws Error on malformed lines.
ExampleRecord ExampleRecordFromJson(std::string_view line);

// Means and metadata only; fields bodega, confusion, semantic, character,
// queries, examples, errored, task, victim, attack, scorer.
std::string SummaryToJson(const RunReport& report);
RunReport SummaryFromJson(std::string_view json);

inline constexpr std::string_view kExamplesFile = "examples.jsonl";
inline constexpr std::string_view kSummaryFile = "summary.json";

// Writes examples.jsonl and summary.json into `dir` (created if missing).
void WriteReport(const RunReport& report, const std::filesystem::path& dir);
// Reads a directory written by WriteReport. Throws Error if files are missing.
RunReport ReadReport(const std::filesystem::path& dir);

// Fixed-width results table: Task, Victim, Attack, BODEGA, Confusion,
// Semantic, Character, Queries.
std::string FormatReportTable(const std::vector<RunReport>& reports);

}  // namespace repattack

#endif  // REPATTACK_REPORT_H_
