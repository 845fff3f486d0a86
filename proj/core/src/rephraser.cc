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
#include "repattack/rephraser.h"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <unordered_set>

#include "http_json.h"
#include "repattack/error.h"
#include "repattack/utf8.h"

namespace repattack {
namespace {

constexpr std::string_view kRephrasePrefix =
    "Rephrase the provided input text. You can add, remove or replace "
    "individual words or punctuation characters, but keep the changes to the "
    "minimum to preserve the original meaning. Return five different "
    "rephrasings, separated by newline. Do not generate any text except the "
    "reformulations.\nINPUT:\n";
constexpr std::string_view kParaphrasePrefix =
    "Paraphrase the provided input text. You can add, remove or replace "
    "individual words or punctuation characters, but keep the changes to the "
    "minimum to preserve the original meaning. Return five different "
    "rephrasings, separated by newline. Do not generate any text except the "
    "reformulations.\nINPUT:\n";
constexpr std::string_view kSimplifyPrefix =
    "Simplify the provided input text. You can add, remove or replace "
    "individual words or punctuation characters, but keep the changes to the "
    "minimum to preserve the original meaning. Return five different "
    "rephrasings, separated by newline. Do not generate any text except the "
    "reformulations.\nINPUT:\n";
constexpr std::string_view kFormalPrefix =
    "Rewrite the provided input text in a more formal style. You can add, "
    "remove or replace individual words or punctuation characters, but keep "
    "the changes to the minimum to preserve the original meaning. Return five "
    "different rephrasings, separated by newline. Do not generate any text "
    "except the reformulations.\nINPUT:\n";
constexpr std::string_view kInformalPrefix =
    "Rewrite the provided input text in a less formal style. You can add, "
    "remove or replace individual words or punctuation characters, but keep "
    "the changes to the minimum to preserve the original meaning. Return five "
    "different rephrasings, separated by newline. Do not generate any text "
    "except the reformulations.\nINPUT:\n";
constexpr std::string_view kChangePrefix =
    "Make changes to the provided input text. You can add, remove or replace "
    "individual words or punctuation characters, but try to preserve the "
    "original meaning. Return five different rephrasings, separated by "
    "newline. Do not generate any text except the reformulations.\nINPUT:\n";

constexpr std::string_view kInputMarker = "INPUT:\n";

// Special tokens chat models leak into completions.
constexpr std::array<std::string_view, 9> kSpecialTokens = {
    "</s>",  "<s>",           "<eos>",
    "<bos>", "<end_of_turn>", "<start_of_turn>",
    "<pad>", "<unk>",         "<|endoftext|>"};

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

std::string RemoveSpecialTokens(std::string line) {
  for (std::string_view token : kSpecialTokens) {
    std::size_t pos;
    while ((pos = line.find(token)) != std::string::npos) {
      line.erase(pos, token.size());
    }
  }
  // Generic "<|...|>" markers (Llama, OLMo, ...).
  std::size_t open;
  while ((open = line.find("<|")) != std::string::npos) {
    const std::size_t close = line.find("|>", open + 2);
    if (close == std::string::npos) break;
    line.erase(open, close + 2 - open);
  }
  return line;
}

// Length of a leading "1." / "2)" / "(3)" / "-" / "*" / "•" marker followed
// by whitespace (or end of line); 0 when there is none.
std::size_t EnumerationMarkerLength(std::string_view line) {
  std::size_t n = 0;
  if (!line.empty() && line[0] == '(') {
    std::size_t i = 1;
    while (i < line.size() && i <= 3 && IsDigit(line[i])) ++i;
    if (i > 1 && i < line.size() && line[i] == ')') n = i + 1;
  } else if (!line.empty() && IsDigit(line[0])) {
    std::size_t i = 0;
    while (i < line.size() && i < 3 && IsDigit(line[i])) ++i;
    if (i < line.size() && (line[i] == '.' || line[i] == ')')) n = i + 1;
  } else if (StartsWith(line, "-") || StartsWith(line, "*")) {
    n = 1;
  } else if (StartsWith(line, "•")) {
    n = std::string_view("•").size();
  }
  if (n == 0) return 0;
  if (n == line.size() || utf8::IsAsciiSpace(line[n])) return n;
  return 0;
}

std::string_view StripSurroundingQuotes(std::string_view line) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 4>
      kPairs = {{{"\"", "\""}, {"“", "”"}, {"'", "'"}, {"‘", "’"}}};
  for (const auto& [open, close] : kPairs) {
    if (line.size() >= open.size() + close.size() && StartsWith(line, open) &&
        EndsWith(line, close)) {
      return line.substr(open.size(), line.size() - open.size() - close.size());
    }
  }
  return line;
}

std::string CleanLine(std::string_view raw) {
  std::string line(raw);
  while (true) {
    std::string next = RemoveSpecialTokens(line);
    std::string_view view = utf8::Trim(next);
    if (std::size_t marker = EnumerationMarkerLength(view)) {
      view = utf8::Trim(view.substr(marker));
    }
    view = utf8::Trim(StripSurroundingQuotes(view));
    if (view == line) return line;
    line = std::string(view);
  }
}

bool IsPromptEcho(std::string_view line) {
  return StartsWith(line, "INPUT:") || StartsWith(line, "OUTPUT:");
}

}  // namespace

std::string_view PromptKindName(PromptKind kind) {
  switch (kind) {
    case PromptKind::kRephrase:
      return "REPHRASE";
    case PromptKind::kParaphrase:
      return "PARAPHRASE";
    case PromptKind::kSimplify:
      return "SIMPLIFY";
    case PromptKind::kFormal:
      return "FORMAL";
    case PromptKind::kInformal:
      return "INFORMAL";
    case PromptKind::kChange:
      return "CHANGE";
  }
  return "REPHRASE";
}

PromptKind ParsePromptKind(std::string_view name) {
  std::string upper(utf8::Trim(name));
  for (char& c : upper) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  for (PromptKind kind : kAllPromptKinds) {
    if (PromptKindName(kind) == upper) return kind;
  }
  throw PreconditionError("unknown prompt kind: " + std::string(name));
}

std::vector<PromptKind> ParsePromptKinds(std::string_view list) {
  std::vector<PromptKind> kinds;
  std::size_t begin = 0;
  while (begin <= list.size()) {
    std::size_t comma = list.find(',', begin);
    if (comma == std::string_view::npos) comma = list.size();
    const std::string_view item = utf8::Trim(list.substr(begin, comma - begin));
    if (!item.empty()) kinds.push_back(ParsePromptKind(item));
    begin = comma + 1;
  }
  if (kinds.empty()) throw PreconditionError("at least one prompt kind needed");
  return kinds;
}

std::string_view PromptPrefix(PromptKind kind) {
  switch (kind) {
    case PromptKind::kRephrase:
      return kRephrasePrefix;
    case PromptKind::kParaphrase:
      return kParaphrasePrefix;
    case PromptKind::kSimplify:
      return kSimplifyPrefix;
    case PromptKind::kFormal:
      return kFormalPrefix;
    case PromptKind::kInformal:
      return kInformalPrefix;
    case PromptKind::kChange:
      return kChangePrefix;
  }
  return kRephrasePrefix;
}

std::string BuildPrompt(PromptKind kind, const Fragment& fragment) {
  if (fragment.text.empty()) {
    throw PreconditionError("cannot build a prompt for an empty fragment");
  }
  std::string prompt(PromptPrefix(kind));
  prompt += fragment.text;
  prompt += kPromptSuffix;
  return prompt;
}

RephraseRequest RephraseRequest::Make(PromptKind kind,
                                      const Fragment& fragment) {
  return RephraseRequest{BuildPrompt(kind, fragment), 5, fragment};
}

std::string_view ExtractPromptFragment(std::string_view prompt) {
  const std::size_t input = prompt.find(kInputMarker);
  const std::size_t output = prompt.rfind(kPromptSuffix);
  if (input == std::string_view::npos || output == std::string_view::npos) {
    return {};
  }
  const std::size_t begin = input + kInputMarker.size();
  if (output < begin) return {};
  return prompt.substr(begin, output - begin);
}

std::vector<std::string> ParseRephrasings(std::string_view raw,
                                          std::string_view original) {
  const std::string_view trimmed_original = utf8::Trim(original);
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::size_t begin = 0;
  while (begin <= raw.size()) {
    std::size_t newline = raw.find('\n', begin);
    if (newline == std::string_view::npos) newline = raw.size();
    std::string line = CleanLine(raw.substr(begin, newline - begin));
    begin = newline + 1;
    if (line.empty() || IsPromptEcho(line) || line == trimmed_original) {
      continue;
    }
    if (seen.insert(line).second) out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> RequestRephrasings(RephraseBackend& backend,
                                            PromptKind kind,
                                            const Fragment& fragment,
                                            const RetryPolicy& retry) {
  const std::string prompt = BuildPrompt(kind, fragment);
  for (int attempt = 0;; ++attempt) {
    try {
      return ParseRephrasings(backend.Complete(prompt), fragment.text);
    } catch (const TransportError&) {
      if (attempt >= retry.retries) throw;
      std::this_thread::sleep_for(retry.base_delay * (1 << attempt));
    }
  }
}

HttpBackend::HttpBackend(HttpBackendOptions options)
    : options_(std::move(options)) {
  internal::ParseUrl(options_.url);
  if (options_.api_key.empty() && !options_.api_key_env.empty()) {
    if (const char* key = std::getenv(options_.api_key_env.c_str())) {
      options_.api_key = key;
    }
  }
}

std::string HttpBackend::Complete(std::string_view prompt) {
  nlohmann::json body = {{"model", options_.model},
                         {"prompt", std::string(prompt)},
                         {"temperature", options_.temperature},
                         {"max_tokens", options_.max_tokens}};
  internal::Headers headers;
  if (!options_.api_key.empty()) {
    headers.emplace_back("Authorization", "Bearer " + options_.api_key);
  }
  const nlohmann::json reply =
      internal::PostJson(options_.url, body, options_.timeout, headers);
  if (!reply.is_object() || !reply.contains("completion") ||
      !reply["completion"].is_string()) {
    throw MalformedResponse("rephrase backend reply lacks \"completion\"");
  }
  return reply["completion"].get<std::string>();
}

std::string HttpBackend::Identity() const { return "http:" + options_.model; }

}  // namespace repattack
