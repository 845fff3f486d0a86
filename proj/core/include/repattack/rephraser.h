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
#ifndef REPATTACK_REPHRASER_H_
#define REPATTACK_REPHRASER_H_

#include <array>
#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repattack/segmentation.h"

namespace repattack {

enum class PromptKind {
  kRephrase,
  kParaphrase,
  kSimplify,
  kFormal,
  kInformal,
  kChange
};

inline constexpr std::array<PromptKind, 6> kAllPromptKinds = {
    PromptKind::kRephrase, PromptKind::kParaphrase, PromptKind::kSimplify,
    PromptKind::kFormal,   PromptKind::kInformal,   PromptKind::kChange};

std::string_view PromptKindName(PromptKind kind);
// Case-insensitive; throws PreconditionError on unknown names.
PromptKind ParsePromptKind(std::string_view name);
// Comma-separated list, e.g. "formal,informal".
std::vector<PromptKind> ParsePromptKinds(std::string_view list);

// Template text preceding the fragment, ending in "INPUT:\n".
std::string_view PromptPrefix(PromptKind kind);
// Text following the fragment.
inline constexpr std::string_view kPromptSuffix = "\nOUTPUT:";

std::string BuildPrompt(PromptKind kind, const Fragment& fragment);

struct RephraseRequest {
  std::string prompt;
  int expected_count = 5;
  Fragment fragment;

  static RephraseRequest Make(PromptKind kind, const Fragment& fragment);
};

// Anything that turns a prompt into a raw completion.
class RephraseBackend {
 public:
  virtual ~RephraseBackend() = default;

  // Throws TransportError (or TimeoutError) when the backend is unreachable.
  virtual std::string Complete(std::string_view prompt) = 0;

  // "<backend>:<model>", recorded in reports.
  virtual std::string Identity() const = 0;

  virtual bool deterministic() const = 0;
};

struct HttpBackendOptions {
  std::string url;  // http://host[:port]/path
  std::string model = "default";
  double temperature = 0.7;
  int max_tokens = 512;
  std::chrono::milliseconds timeout{60000};
  // Sent as "Authorization: Bearer <key>" when set.
  std::string api_key;
  // Environment variable consulted when api_key is empty.
  std::string api_key_env = "REPATTACK_API_KEY";
};

// POST {"model", "prompt", "temperature", "max_tokens"} -> {"completion"}.
class HttpBackend : public RephraseBackend {
 public:
  explicit HttpBackend(HttpBackendOptions options);

  std::string Complete(std::string_view prompt) override;
  std::string Identity() const override;
  bool deterministic() const override { return false; }

  const HttpBackendOptions& options() const { return options_; }

 private:
  HttpBackendOptions options_;
};

// Deterministic offline backend. For every synonym entry whose source phrase
// occurs (whole-word, case-insensitive) in the fragment, emits one
// rephrasing with just that entry applied; when two or more entries match,
// adds one rephrasing with all of them applied. Output is an enumerated
// list, like a chat model's.
class StubBackend : public RephraseBackend {
 public:
  using SynonymTable = std::vector<std::pair<std::string, std::string>>;

  explicit StubBackend(SynonymTable table);

  // Reads "source<TAB>replacement" lines; '#' starts a comment line.
  static StubBackend FromFile(const std::string& path);
  // "rise=surge,alarming=notable".
  static StubBackend FromInline(std::string_view spec);

  std::string Complete(std::string_view prompt) override;
  std::string Identity() const override;
  bool deterministic() const override { return true; }

  const SynonymTable& table() const { return table_; }

 private:
  SynonymTable table_;
};

// Extracts the fragment text from a prompt built by BuildPrompt. Returns an
// empty view when the markers are missing.
std::string_view ExtractPromptFragment(std::string_view prompt);

std::vector<std::string> ParseRephrasings(std::string_view raw,
                                          std::string_view original);

struct RetryPolicy {
  int retries = 2;
  std::chrono::milliseconds base_delay{250};
};

// BuildPrompt + Complete + ParseRephrasings. Transport failures are retried
// with exponential backoff and rethrown once retries run out. An empty
// result means the backend offered no usable candidates.
std::vector<std::string> RequestRephrasings(RephraseBackend& backend,
                                            PromptKind kind,
                                            const Fragment& fragment,
                                            const RetryPolicy& retry = {});

}  // namespace repattack

#endif  // REPATTACK_REPHRASER_H_
