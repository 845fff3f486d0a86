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
#include "cli/dataset.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "repattack/error.h"
#include "repattack/segmentation.h"

namespace repattack::cli {
namespace {

void CheckRecord(const DatasetRecord& r, std::size_t line_no) {
  if (r.label != 0 && r.label != 1) {
    throw Error("line " + std::to_string(line_no) + ": label must be 0 or 1");
  }
  if (r.text.empty()) {
    throw Error("line " + std::to_string(line_no) + ": empty text");
  }
  ParseTaskId(r.task);
}

}  // namespace

std::vector<DatasetRecord> LoadDataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read dataset: " + path);
  std::vector<DatasetRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    DatasetRecord r;
    try {
      const auto j = nlohmann::json::parse(line);
      r.id = j.contains("id")
                 ? (j["id"].is_string() ? j["id"].get<std::string>()
                                        : j["id"].dump())
                 : std::to_string(line_no);
      r.label = j.at("label").get<int>();
      r.text = j.at("text").get<std::string>();
      r.task = j.value("task", "GENERIC");
    } catch (const nlohmann::json::exception& e) {
      throw Error("line " + std::to_string(line_no) +
                  ": malformed dataset record: " + e.what());
    }
    CheckRecord(r, line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::string DatasetRecordToJson(const DatasetRecord& r) {
  return nlohmann::json{
      {"id", r.id}, {"label", r.label}, {"text", r.text}, {"task", r.task}}
      .dump();
}

std::vector<DatasetRecord> ParseTsv(std::string_view contents,
                                    std::string_view task,
                                    std::string_view separator) {
  if (separator.empty()) throw PreconditionError("empty TSV separator");
  std::vector<DatasetRecord> records;
  std::size_t begin = 0;
  std::size_t line_no = 0;
  while (begin < contents.size()) {
    std::size_t end = contents.find('\n', begin);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const std::size_t sep = line.find(separator);
    if (sep == std::string_view::npos) {
      throw Error("line " + std::to_string(line_no) + ": missing separator");
    }
    DatasetRecord r;
    r.id = std::to_string(line_no);
    r.task = std::string(task);
    const std::string label(line.substr(0, sep));
    if (label != "0" && label != "1") {
      throw Error("line " + std::to_string(line_no) + ": label must be 0 or 1");
    }
    r.label = label == "1" ? 1 : 0;
    r.text = std::string(line.substr(sep + separator.size()));
    CheckRecord(r, line_no);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace repattack::cli
