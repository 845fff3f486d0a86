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
#ifndef REPATTACK_VICTIMS_H_
#define REPATTACK_VICTIMS_H_

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace repattack {

// Binary classifier output. probabilities[label] is the winning class.
struct VictimVerdict {
  int label = 0;
  std::array<double, 2> probabilities{1.0, 0.0};

  // Label taken as argmax (ties go to class 0).
  static VictimVerdict FromProbabilities(double p0, double p1);

  bool IsValid() const;
  // Throws MalformedResponse when IsValid() is false.
  void Validate() const;

  friend bool operator==(const VictimVerdict&, const VictimVerdict&) = default;
};

inline constexpr double kProbabilitySumTolerance = 1e-6;

class Victim {
 public:
  virtual ~Victim() = default;

  virtual VictimVerdict Classify(std::string_view text) = 0;
  virtual std::string Identity() const = 0;
  virtual bool deterministic() const = 0;
};

// Class 1 ("flagged") iff any trigger word occurs as a token
// (case-insensitive). Probability of class 1 is on_prob when triggered and
// off_prob otherwise.
class KeywordVictim : public Victim {
 public:
  explicit KeywordVictim(std::vector<std::string> triggers,
                         double on_prob = 0.9, double off_prob = 0.1);

  VictimVerdict Classify(std::string_view text) override;
  std::string Identity() const override;
  bool deterministic() const override { return true; }

 private:
  std::vector<std::string> triggers_;  // lowercased
  double on_prob_;
  double off_prob_;
};

// p(class 1) = logistic(bias + sum of weight[fnv1a(lowercase token) % W])
// over the tokens of the text, with weights drawn uniformly from
// [-weight_scale, weight_scale] by a seeded mt19937_64.
class HashLinearVictim : public Victim {
 public:
  HashLinearVictim(std::uint64_t seed, std::size_t buckets = 1024,
                   double bias = 0.0, double weight_scale = 1.0);

  VictimVerdict Classify(std::string_view text) override;
  std::string Identity() const override;
  bool deterministic() const override { return true; }

  double Logit(std::string_view text) const;
  double bias() const { return bias_; }

 private:
  std::uint64_t seed_;
  double bias_;
  double weight_scale_;
  std::vector<double> weights_;
};

struct HttpVictimOptions {
  std::string url;
  std::chrono::milliseconds timeout{30000};
  // Optional extra header, e.g. {"Authorization", "Bearer ..."}.
  std::string auth_header_name;
  std::string auth_header_value;
};

// POST {"text"} -> {"label", "probabilities": [p0, p1]}.
class HttpVictim : public Victim {
 public:
  explicit HttpVictim(HttpVictimOptions options);

  VictimVerdict Classify(std::string_view text) override;
  std::string Identity() const override;
  bool deterministic() const override { return false; }

 private:
  HttpVictimOptions options_;
};

// Per-example query counter. Consume() is an atomic check-and-increment, so
// `used` can never pass `limit`, even under concurrent misuse.
class QueryMeter {
 public:
  explicit QueryMeter(int limit);

  QueryMeter(const QueryMeter&) = delete;
  QueryMeter& operator=(const QueryMeter&) = delete;

  // Throws BudgetExhausted when used() == limit().
  void Consume();

  int limit() const { return limit_; }
  int used() const { return used_.load(); }
  int remaining() const { return limit_ - used(); }
  bool exhausted() const { return used() >= limit_; }

 private:
  const int limit_;
  std::atomic<int> used_{0};
};

VictimVerdict MeteredClassify(QueryMeter& meter, Victim& victim,
                              std::string_view text);

}  // namespace repattack

#endif  // REPATTACK_VICTIMS_H_
