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
#ifndef REPATTACK_TOOLS_CLI_DATASET_H_
#define REPATTACK_TOOLS_CLI_DATASET_H_

#include <string>
#include <string_view>
#include <vector>

namespace repattack::cli {

struct DatasetRecord {
  std::string id;
  int label = 0;
  std::string text;
  std::string task = "GENERIC";
};

// One JSON object per line: {"id", "label", "text", "task"}. "id" defaults
// to the line number and "task" to GENERIC. Throws Error on unreadable
// files or records that break the label/text invariants.
std::vector<DatasetRecord> LoadDataset(const std::string& path);

std::string DatasetRecordToJson(const DatasetRecord& record);

// "label<sep>text" lines. Everything after the first separator is the
// text, so FC claim/evidence columns stay joined by the separator.
std::vector<DatasetRecord> ParseTsv(std::string_view contents,
                                    std::string_view task,
                                    std::string_view separator = "\t");

}  // namespace repattack::cli

#endif  // REPATTACK_TOOLS_CLI_DATASET_H_
