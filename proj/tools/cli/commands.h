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
#ifndef REPATTACK_TOOLS_CLI_COMMANDS_H_
#define REPATTACK_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <string>

#include "cli/run_config.h"

namespace repattack::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  // The run finished but some examples errored (e.g. unreachable victim);
  // a partial report was written.
  kExitPartial = 2,
  kExitVerifyFailed = 3,
};

inline constexpr std::string_view kConfigFile = "config.json";

// Attacks every dataset record, writes examples.jsonl, summary.json and
// config.json into config.out and prints the results table. Unsuccessful
// attacks are results, not errors.
int CmdAttack(const RunConfig& config, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string report_dir;
  std::string victim;
  std::uint64_t seed = 0;
  int timeout_ms = 30000;
};

// Re-queries the victim on every recorded success and fails if any of them
// no longer flips the recorded original label.
int CmdVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err);

struct ScoreOptions {
  std::string original;
  std::string attacked;
  // Optional; without a victim confusion is reported as 0.
  std::string victim;
  std::uint64_t seed = 0;
  std::string scorer = "lexical";
};

// Line-aligned pairs from two files (plain text, one record per line, or
// JSON-lines with a "text" or "output" field). Prints per-pair scores and
// their means.
int CmdScore(const ScoreOptions& options, std::ostream& out, std::ostream& err);

struct ConvertOptions {
  std::string tsv;
  std::string out;
  std::string task = "GENERIC";
  std::string separator = "\t";
};

// label<TAB>text -> JSON-lines dataset.
int CmdConvert(const ConvertOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace repattack::cli

#endif  // REPATTACK_TOOLS_CLI_COMMANDS_H_
