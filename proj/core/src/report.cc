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
#include "repattack/report.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "repattack/error.h"

namespace repattack {
namespace {

using nlohmann::json;

json ScoresToJson(const ExampleScore& s) {
  return {{"bodega", s.bodega},
          {"confusion", s.confusion},
          {"semantic", s.semantic},
          {"character", s.character},
          {"queries", s.queries}};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

ExampleRecord MakeExampleRecord(std::string id, std::string task,
                                std::string_view input,
                                const AttackOutcome& outcome,
                                SemanticScorer& scorer) {
  ExampleRecord r;
  r.id = std::move(id);
  r.task = std::move(task);
  r.label = outcome.true_label;
  r.original_label = outcome.original_verdict.label;
  r.input = std::string(input);
  r.success = outcome.success;
  r.errored = outcome.errored;
  r.error = outcome.error;
  r.restarts = outcome.restarts;
  r.trace = outcome.trace;
  r.output = outcome.success ? *outcome.adversarial_text : r.input;
  r.final_label =
      outcome.success ? outcome.final_verdict.label : r.original_label;
  r.scores = ScorePair(r.input, r.output, outcome.success ? 1 : 0,
                       outcome.queries_used, scorer);
  return r;
}

RunReport AggregateReport(std::vector<ExampleRecord> examples,
                          ReportMeta meta) {
  if (examples.empty()) {
    throw PreconditionError("cannot aggregate an empty run");
  }
  RunReport report;
  report.meta = std::move(meta);
  for (const ExampleRecord& e : examples) {
    report.bodega += e.scores.bodega;
    report.confusion += e.scores.confusion;
    report.semantic += e.scores.semantic;
    report.character += e.scores.character;
    report.queries += e.scores.queries;
    if (e.errored) ++report.errored_count;
  }
  const double n = static_cast<double>(examples.size());
  report.bodega /= n;
  report.confusion /= n;
  report.semantic /= n;
  report.character /= n;
  report.queries /= n;
  report.examples_count = static_cast<int>(examples.size());
  report.examples = std::move(examples);
  return report;
}

std::string ExampleRecordToJson(const ExampleRecord& r) {
  json trace = json::array();
  for (const TraceEntry& t : r.trace) {
    trace.push_back({{"hash", t.text_hash}, {"prob", t.orig_class_prob}});
  }
  json j = {{"id", r.id},
            {"task", r.task},
            {"label", r.label},
            {"original_label", r.original_label},
            {"final_label", r.final_label},
            {"input", r.input},
            {"output", r.output},
            {"success", r.success},
            {"errored", r.errored},
            {"restarts", r.restarts},
            {"scores", ScoresToJson(r.scores)},
            {"trace", std::move(trace)}};
  if (r.errored) j["error"] = r.error;
  return j.dump();
}

ExampleRecord ExampleRecordFromJson(std::string_view line) {
  try {
    const json j = json::parse(line);
    ExampleRecord r;
    r.id = j.at("id").get<std::string>();
    r.task = j.value("task", "");
    r.label = j.at("label").get<int>();
    r.original_label = j.at("original_label").get<int>();
    r.final_label = j.at("final_label").get<int>();
    r.input = j.at("input").get<std::string>();
    r.output = j.at("output").get<std::string>();
    r.success = j.at("success").get<bool>();
    r.errored = j.value("errored", false);
    r.error = j.value("error", "");
    r.restarts = j.value("restarts", 0);
    const json& s = j.at("scores");
    r.scores.bodega = s.at("bodega").get<double>();
    r.scores.confusion = s.at("confusion").get<double>();
    r.scores.semantic = s.at("semantic").get<double>();
    r.scores.character = s.at("character").get<double>();
    r.scores.queries = s.at("queries").get<int>();
    for (const json& t : j.value("trace", json::array())) {
      r.trace.push_back(
          {t.at("hash").get<std::string>(), t.at("prob").get<double>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed example record: ") + e.what());
  }
}

std::string SummaryToJson(const RunReport& report) {
  const json j = {{"task", report.meta.task},
                  {"victim", report.meta.victim},
                  {"attack", report.meta.attack},
                  {"scorer", report.meta.scorer},
                  {"deterministic", report.meta.deterministic},
                  {"examples", report.examples_count},
                  {"errored", report.errored_count},
                  {"bodega", report.bodega},
                  {"confusion", report.confusion},
                  {"semantic", report.semantic},
                  {"character", report.character},
                  {"queries", report.queries}};
  return j.dump(2) + "\n";
}

RunReport SummaryFromJson(std::string_view text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    r.meta.task = j.value("task", "");
    r.meta.victim = j.value("victim", "");
    r.meta.attack = j.value("attack", "");
    r.meta.scorer = j.value("scorer", "");
    r.meta.deterministic = j.value("deterministic", true);
    r.examples_count = j.at("examples").get<int>();
    r.errored_count = j.value("errored", 0);
    r.bodega = j.at("bodega").get<double>();
    r.confusion = j.at("confusion").get<double>();
    r.semantic = j.at("semantic").get<double>();
    r.character = j.at("character").get<double>();
    r.queries = j.at("queries").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed summary: ") + e.what());
  }
}

void WriteReport(const RunReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / kExamplesFile, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + (dir / kExamplesFile).string());
    for (const ExampleRecord& r : report.examples) {
      out << ExampleRecordToJson(r) << '\n';
    }
  }
  std::ofstream out(dir / kSummaryFile, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + (dir / kSummaryFile).string());
  out << SummaryToJson(report);
}

RunReport ReadReport(const std::filesystem::path& dir) {
  RunReport report = SummaryFromJson(ReadFile(dir / kSummaryFile));
  std::istringstream lines(ReadFile(dir / kExamplesFile));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    report.examples.push_back(ExampleRecordFromJson(line));
  }
  return report;
}

std::string FormatReportTable(const std::vector<RunReport>& reports) {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%-8s %-24s %-24s %8s %10s %9s %10s %8s\n",
                "Task", "Victim", "Attack", "BODEGA", "Confusion", "Semantic",
                "Character", "Queries");
  out += buf;
  for (const RunReport& r : reports) {
    std::snprintf(buf, sizeof(buf),
                  "%-8s %-24s %-24s %8.4f %10.4f %9.4f %10.4f %8.4f\n",
                  r.meta.task.c_str(), r.meta.victim.substr(0, 24).c_str(),
                  r.meta.attack.substr(0, 24).c_str(), r.bodega, r.confusion,
                  r.semantic, r.character, r.queries);
    out += buf;
  }
  return out;
}

}  // namespace repattack
