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
#include "cli/run_config.h"

#include <chrono>

#include "json.hpp"
#include "repattack/error.h"
#include "repattack/utf8.h"

namespace repattack::cli {
namespace {

bool StartsWith(const std::string& s, std::string_view prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::vector<std::string> SplitList(std::string_view list, char sep) {
  std::vector<std::string> items;
  std::size_t begin = 0;
  while (begin <= list.size()) {
    std::size_t end = list.find(sep, begin);
    if (end == std::string_view::npos) end = list.size();
    const std::string_view item = utf8::Trim(list.substr(begin, end - begin));
    if (!item.empty()) items.emplace_back(item);
    begin = end + 1;
  }
  return items;
}

double ParseDouble(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw PreconditionError("bad number for " + what + ": " + s);
  }
}

}  // namespace

void RunConfig::Validate() const {
  if (budget < 1) throw PreconditionError("--budget must be >= 1");
  if (beam < 1) throw PreconditionError("--beam must be >= 1");
  if (restarts < 0) throw PreconditionError("--restarts must be >= 0");
  if (parallel < 1) throw PreconditionError("--parallel must be >= 1");
  if (min_phrase_len < 1)
    throw PreconditionError("min phrase length must be >= 1");
  ParsePromptKinds(prompts);
  if (!task.empty()) ParseTaskId(task);
}

AttackConfig RunConfig::ToAttackConfig() const {
  AttackConfig c;
  c.budget = budget;
  c.beam_width = beam;
  c.max_restarts = restarts;
  c.prompt_kinds = ParsePromptKinds(prompts);
  c.retry.retries = retries;
  c.retry.base_delay = std::chrono::milliseconds(retry_base_ms);
  return c;
}

TaskProfile RunConfig::ProfileFor(const std::string& record_task) const {
  TaskProfile profile =
      TaskProfile::For(ParseTaskId(task.empty() ? record_task : task));
  profile.min_phrase_len = min_phrase_len;
  profile.record_separator = separator;
  profile.Validate();
  return profile;
}

std::string RunConfig::ToJson() const {
  return nlohmann::json{{"dataset", dataset},
                        {"victim", victim},
                        {"backend", backend},
                        {"model", model},
                        {"temperature", temperature},
                        {"max_tokens", max_tokens},
                        {"prompts", prompts},
                        {"budget", budget},
                        {"beam", beam},
                        {"restarts", restarts},
                        {"scorer", scorer},
                        {"out", out},
                        {"seed", seed},
                        {"parallel", parallel},
                        {"task", task},
                        {"min_phrase_len", min_phrase_len},
                        {"separator", separator},
                        {"retries", retries},
                        {"retry_base_ms", retry_base_ms},
                        {"timeout_ms", timeout_ms}}
             .dump(2) +
         "\n";
}

std::unique_ptr<Victim> MakeVictim(const std::string& spec, std::uint64_t seed,
                                   int timeout_ms) {
  if (StartsWith(spec, "http://")) {
    HttpVictimOptions options;
    options.url = spec;
    options.timeout = std::chrono::milliseconds(timeout_ms);
    if (const char* token = std::getenv("REPATTACK_VICTIM_TOKEN")) {
      options.auth_header_name = "Authorization";
      options.auth_header_value = std::string("Bearer ") + token;
    }
    return std::make_unique<HttpVictim>(options);
  }
  if (StartsWith(spec, "keyword:")) {
    std::string body = spec.substr(8);
    double on = 0.9;
    double off = 0.1;
    if (const std::size_t at = body.find('@'); at != std::string::npos) {
      const std::string probs = body.substr(at + 1);
      body.resize(at);
      const std::size_t slash = probs.find('/');
      if (slash == std::string::npos) {
        throw PreconditionError(
            "keyword victim probabilities look like @ON/OFF");
      }
      on = ParseDouble(probs.substr(0, slash), "keyword on-probability");
      off = ParseDouble(probs.substr(slash + 1), "keyword off-probability");
    }
    std::vector<std::string> triggers = SplitList(body, ',');
    if (triggers.empty())
      throw PreconditionError("keyword victim needs triggers");
    return std::make_unique<KeywordVictim>(std::move(triggers), on, off);
  }
  if (spec == "hash" || StartsWith(spec, "hash:")) {
    std::size_t buckets = 1024;
    double bias = 0.0;
    double scale = 1.0;
    if (spec.size() > 5) {
      for (const std::string& kv : SplitList(spec.substr(5), ',')) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
          throw PreconditionError("hash victim options look like key=value");
        }
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        if (key == "buckets") {
          buckets = static_cast<std::size_t>(ParseDouble(value, key));
        } else if (key == "bias") {
          bias = ParseDouble(value, key);
        } else if (key == "scale") {
          scale = ParseDouble(value, key);
        } else {
          throw PreconditionError("unknown hash victim option: " + key);
        }
      }
    }
    return std::make_unique<HashLinearVictim>(seed, buckets, bias, scale);
  }
  throw PreconditionError("unknown victim spec: " + spec);
}

std::unique_ptr<RephraseBackend> MakeBackend(const RunConfig& config) {
  const std::string& spec = config.backend;
  if (StartsWith(spec, "http://")) {
    HttpBackendOptions options;
    options.url = spec;
    options.model = config.model;
    options.temperature = config.temperature;
    options.max_tokens = config.max_tokens;
    options.timeout = std::chrono::milliseconds(config.timeout_ms);
    return std::make_unique<HttpBackend>(options);
  }
  if (StartsWith(spec, "stub-file:")) {
    return std::make_unique<StubBackend>(
        StubBackend::FromFile(spec.substr(10)));
  }
  if (StartsWith(spec, "stub:")) {
    return std::make_unique<StubBackend>(
        StubBackend::FromInline(spec.substr(5)));
  }
  throw PreconditionError("unknown backend spec: " + spec);
}

std::unique_ptr<SemanticScorer> MakeScorer(const std::string& spec,
                                           int timeout_ms) {
  if (spec.empty() || spec == "lexical") {
    return std::make_unique<LexicalScorer>();
  }
  if (StartsWith(spec, "http://")) {
    return std::make_unique<HttpScorer>(
        HttpScorerOptions{spec, std::chrono::milliseconds(timeout_ms)});
  }
  throw PreconditionError("unknown scorer spec: " + spec);
}

}  // namespace repattack::cli
