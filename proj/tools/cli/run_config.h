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
#ifndef REPATTACK_TOOLS_CLI_RUN_CONFIG_H_
#define REPATTACK_TOOLS_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "repattack/attack_engine.h"
#include "repattack/evaluation.h"
#include "repattack/rephraser.h"
#include "repattack/segmentation.h"
#include "repattack/victims.h"

namespace repattack::cli {

// Everything a run needs, as resolved from flags and an optional config
// file. Component specs:
//   victim:  keyword:WORD[,WORD...][@ON/OFF] | hash[:buckets=N,bias=B,scale=S]
//            | http://host:port/path
//   backend: stub:FROM=TO[,FROM=TO...] | stub-file:PATH | http://host:port/path
//   scorer:  lexical | http://host:port/path
struct RunConfig {
  std::string dataset;
  std::string victim;
  std::string backend;
  std::string model = "default";
  double temperature = 0.7;
  int max_tokens = 512;
  std::string prompts = "REPHRASE";
  int budget = 50;
  int beam = 5;
  int restarts = 3;
  std::string scorer = "lexical";
  std::string out;
  std::uint64_t seed = 0;
  int parallel = 1;
  // Empty: use each record's own task.
  std::string task;
  int min_phrase_len = 60;
  std::string separator = "\t";
  int retries = 2;
  int retry_base_ms = 250;
  int timeout_ms = 60000;

  // Throws PreconditionError.
  void Validate() const;

  AttackConfig ToAttackConfig() const;
  TaskProfile ProfileFor(const std::string& record_task) const;

  std::string ToJson() const;
};

std::unique_ptr<Victim> MakeVictim(const std::string& spec, std::uint64_t seed,
                                   int timeout_ms = 30000);
std::unique_ptr<RephraseBackend> MakeBackend(const RunConfig& config);
std::unique_ptr<SemanticScorer> MakeScorer(const std::string& spec,
                                           int timeout_ms = 30000);

}  // namespace repattack::cli

#endif  // REPATTACK_TOOLS_CLI_RUN_CONFIG_H_
