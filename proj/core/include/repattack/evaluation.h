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
#ifndef REPATTACK_EVALUATION_H_
#define REPATTACK_EVALUATION_H_

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>

#include "repattack/victims.h"

namespace repattack {

// 1 iff the two verdicts disagree on the label.
int ConfusionScore(const VictimVerdict& original,
                   const VictimVerdict& attacked);

// Levenshtein distance over code points.
std::size_t Levenshtein(std::string_view a, std::string_view b);

// 1 - levenshtein(a, b) / max(|a|, |b|), in code points; 1 for two empty
// strings.
double CharacterScore(std::string_view a, std::string_view b);

class SemanticScorer {
 public:
  virtual ~SemanticScorer() = default;
  // Similarity in [0, 1] between the original and the attacked text.
  virtual double Score(std::string_view reference,
                       std::string_view candidate) = 0;
  virtual std::string Identity() const = 0;
};

// Unigram F1 over lowercased tokens (multiset overlap). Two empty texts
// score 1; one empty text scores 0.
class LexicalScorer : public SemanticScorer {
 public:
  double Score(std::string_view reference, std::string_view candidate) override;
  std::string Identity() const override { return "lexical-f1"; }
};

struct HttpScorerOptions {
  std::string url;
  std::chrono::milliseconds timeout{30000};
};

// POST {"reference", "candidate"} -> {"score"}. Scores outside [0, 1] are
// rejected as malformed.
class HttpScorer : public SemanticScorer {
 public:
  explicit HttpScorer(HttpScorerOptions options);

  double Score(std::string_view reference, std::string_view candidate) override;
  std::string Identity() const override;

 private:
  HttpScorerOptions options_;
};

inline double BodegaScore(double confusion, double semantic, double character) {
  return confusion * semantic * character;
}

struct ExampleScore {
  double confusion = 0.0;
  double semantic = 0.0;
  double character = 0.0;
  double bodega = 0.0;
  int queries = 0;

  static ExampleScore Make(int confusion, double semantic, double character,
                           int queries);
};

// Scores an (original, attacked) text pair.
ExampleScore ScorePair(std::string_view original, std::string_view attacked,
                       int confusion, int queries, SemanticScorer& scorer);

}  // namespace repattack

#endif  // REPATTACK_EVALUATION_H_
