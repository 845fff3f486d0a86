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
#include "repattack/evaluation.h"

#include <algorithm>
#include <map>
#include <vector>

#include "http_json.h"
#include "repattack/change_extraction.h"
#include "repattack/error.h"
#include "repattack/utf8.h"

namespace repattack {

int ConfusionScore(const VictimVerdict& original,
                   const VictimVerdict& attacked) {
  return original.label != attacked.label ? 1 : 0;
}

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  const std::u32string s = utf8::Decode(a);
  const std::u32string t = utf8::Decode(b);
  std::vector<std::size_t> prev(t.size() + 1);
  std::vector<std::size_t> curr(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      curr[j] = std::min({prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1),
                          prev[j] + 1, curr[j - 1] + 1});
    }
    std::swap(prev, curr);
  }
  return prev[t.size()];
}

double CharacterScore(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(utf8::Length(a), utf8::Length(b));
  if (longest == 0) return 1.0;
  return 1.0 -
         static_cast<double>(Levenshtein(a, b)) / static_cast<double>(longest);
}

double LexicalScorer::Score(std::string_view reference,
                            std::string_view candidate) {
  auto counts = [](std::string_view text) {
    std::map<std::string, int> bag;
    for (const Token& token : Tokenize(text)) {
      ++bag[utf8::AsciiLower(token.text)];
    }
    return bag;
  };
  const auto ref = counts(reference);
  const auto cand = counts(candidate);
  int ref_total = 0;
  int cand_total = 0;
  int overlap = 0;
  for (const auto& [word, n] : ref) ref_total += n;
  for (const auto& [word, n] : cand) {
    cand_total += n;
    if (auto it = ref.find(word); it != ref.end()) {
      overlap += std::min(n, it->second);
    }
  }
  if (ref_total == 0 && cand_total == 0) return 1.0;
  if (ref_total == 0 || cand_total == 0 || overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / cand_total;
  const double recall = static_cast<double>(overlap) / ref_total;
  return std::clamp(2.0 * precision * recall / (precision + recall), 0.0, 1.0);
}

HttpScorer::HttpScorer(HttpScorerOptions options)
    : options_(std::move(options)) {
  internal::ParseUrl(options_.url);
}

double HttpScorer::Score(std::string_view reference,
                         std::string_view candidate) {
  const nlohmann::json reply =
      internal::PostJson(options_.url,
                         {{"reference", std::string(reference)},
                          {"candidate", std::string(candidate)}},
                         options_.timeout);
  if (!reply.is_object() || !reply.contains("score") ||
      !reply["score"].is_number()) {
    throw MalformedResponse("scorer reply must be {\"score\": number}");
  }
  const double score = reply["score"].get<double>();
  if (!(score >= 0.0 && score <= 1.0)) {
    throw MalformedResponse("scorer returned a score outside [0, 1]");
  }
  return score;
}

std::string HttpScorer::Identity() const { return "http:" + options_.url; }

ExampleScore ExampleScore::Make(int confusion, double semantic,
                                double character, int queries) {
  ExampleScore s;
  s.confusion = confusion;
  s.semantic = semantic;
  s.character = character;
  s.bodega = BodegaScore(s.confusion, semantic, character);
  s.queries = queries;
  return s;
}

ExampleScore ScorePair(std::string_view original, std::string_view attacked,
                       int confusion, int queries, SemanticScorer& scorer) {
  return ExampleScore::Make(confusion, scorer.Score(original, attacked),
                            CharacterScore(original, attacked), queries);
}

}  // namespace repattack
