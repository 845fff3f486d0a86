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
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.h"

namespace {

// Lets "--separator '\t'" mean a tab.
std::string Unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      switch (s[i + 1]) {
        case 't':
          out += '\t';
          ++i;
          continue;
        case 'n':
          out += '\n';
          ++i;
          continue;
        case '\\':
          out += '\\';
          ++i;
          continue;
        default:
          break;
      }
    }
    out += s[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace repattack::cli;

  CLI::App app{"Query-budgeted rephrasing attacks on text classifiers"};
  app.require_subcommand(1);

  RunConfig config;
  auto* attack =
      app.add_subcommand("attack", "Attack every record of a dataset");
  attack->set_config("--config", "", "INI/TOML file with default flag values");
  attack->add_option("--dataset", config.dataset, "JSON-lines dataset")
      ->required();
  attack
      ->add_option("--victim", config.victim,
                   "keyword:W[,W..][@ON/OFF] | hash[:buckets=N,bias=B,scale=S] "
                   "| http://...")
      ->required();
  attack
      ->add_option("--backend", config.backend,
                   "stub:FROM=TO[,..] | stub-file:PATH | http://...")
      ->required();
  attack
      ->add_option("--model", config.model,
                   "Model name sent to an HTTP backend")
      ->capture_default_str();
  attack->add_option("--temperature", config.temperature)
      ->capture_default_str();
  attack->add_option("--max-tokens", config.max_tokens)->capture_default_str();
  attack
      ->add_option("--prompts", config.prompts,
                   "Comma-separated: "
                   "REPHRASE,PARAPHRASE,SIMPLIFY,FORMAL,INFORMAL,CHANGE")
      ->capture_default_str();
  attack->add_option("--budget", config.budget, "Victim queries per example")
      ->capture_default_str();
  attack->add_option("--beam", config.beam, "Beam width")
      ->capture_default_str();
  attack
      ->add_option("--restarts", config.restarts, "Maximum rephrasing restarts")
      ->capture_default_str();
  attack->add_option("--scorer", config.scorer, "lexical | http://...")
      ->capture_default_str();
  attack->add_option("--out", config.out, "Report directory")->required();
  attack->add_option("--seed", config.seed, "Seed for mock victims")
      ->capture_default_str();
  attack
      ->add_option("--parallel", config.parallel,
                   "Records attacked concurrently")
      ->capture_default_str();
  attack->add_option("--task", config.task,
                     "Override every record's task (PR, FC, RD, HN, GENERIC)");
  attack->add_option("--min-phrase-len", config.min_phrase_len)
      ->capture_default_str();
  std::string attack_separator = "\\t";
  attack
      ->add_option("--separator", attack_separator,
                   "FC claim/evidence separator")
      ->capture_default_str();
  attack->add_option("--retries", config.retries)->capture_default_str();
  attack->add_option("--timeout-ms", config.timeout_ms)->capture_default_str();

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand(
      "verify", "Re-check recorded successes against a victim");
  verify->add_option("--report", verify_options.report_dir, "Report directory")
      ->required();
  verify->add_option("--victim", verify_options.victim)->required();
  verify->add_option("--seed", verify_options.seed)->capture_default_str();

  ScoreOptions score_options;
  auto* score =
      app.add_subcommand("score", "Score line-aligned original/attacked texts");
  score->add_option("original", score_options.original)->required();
  score->add_option("attacked", score_options.attacked)->required();
  score->add_option("--victim", score_options.victim,
                    "Victim used for confusion");
  score->add_option("--seed", score_options.seed)->capture_default_str();
  score->add_option("--scorer", score_options.scorer)->capture_default_str();

  ConvertOptions convert_options;
  std::string convert_separator = "\\t";
  auto* convert = app.add_subcommand(
      "convert", "Convert label<TAB>text files to JSON-lines");
  convert->add_option("--tsv", convert_options.tsv)->required();
  convert->add_option("--out", convert_options.out)->required();
  convert->add_option("--task", convert_options.task)->capture_default_str();
  convert->add_option("--separator", convert_separator)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (attack->parsed()) {
    config.separator = Unescape(attack_separator);
    return CmdAttack(config, std::cout, std::cerr);
  }
  if (verify->parsed()) return CmdVerify(verify_options, std::cout, std::cerr);
  if (score->parsed()) return CmdScore(score_options, std::cout, std::cerr);
  if (convert->parsed()) {
    convert_options.separator = Unescape(convert_separator);
    return CmdConvert(convert_options, std::cout, std::cerr);
  }
  return kExitError;
}
