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
#include "repattack/victims.h"

#include <cmath>
#include <random>
#include <sstream>

#include "http_json.h"
#include "repattack/change_extraction.h"
#include "repattack/error.h"
#include "repattack/hashing.h"
#include "repattack/utf8.h"

namespace repattack {

VictimVerdict VictimVerdict::FromProbabilities(double p0, double p1) {
  return VictimVerdict{p1 > p0 ? 1 : 0, {p0, p1}};
}

bool VictimVerdict::IsValid() const {
  if (label != 0 && label != 1) return false;
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) return false;
  }
  if (std::abs(probabilities[0] + probabilities[1] - 1.0) >
      kProbabilitySumTolerance) {
    return false;
  }
  return probabilities[label] >= probabilities[1 - label];
}

void VictimVerdict::Validate() const {
  if (!IsValid()) {
    std::ostringstream msg;
    msg << "invalid victim verdict: label=" << label << " probabilities=["
        << probabilities[0] << ", " << probabilities[1] << "]";
    throw MalformedResponse(msg.str());
  }
}

KeywordVictim::KeywordVictim(std::vector<std::string> triggers, double on_prob,
                             double off_prob)
    : on_prob_(on_prob), off_prob_(off_prob) {
  if (!(on_prob >= 0.0 && on_prob <= 1.0 && off_prob >= 0.0 &&
        off_prob <= 1.0)) {
    throw PreconditionError("keyword victim probabilities must be in [0,1]");
  }
  for (const std::string& t : triggers) {
    triggers_.push_back(utf8::AsciiLower(t));
  }
}

VictimVerdict KeywordVictim::Classify(std::string_view text) {
  bool triggered = false;
  for (const Token& token : Tokenize(text)) {
    const std::string lowered = utf8::AsciiLower(token.text);
    for (const std::string& trigger : triggers_) {
      if (lowered == trigger) triggered = true;
    }
    if (triggered) break;
  }
  const double p1 = triggered ? on_prob_ : off_prob_;
  return VictimVerdict::FromProbabilities(1.0 - p1, p1);
}

std::string KeywordVictim::Identity() const {
  std::ostringstream id;
  id << "keyword:";
  for (std::size_t i = 0; i < triggers_.size(); ++i) {
    id << (i ? "," : "") << triggers_[i];
  }
  id << "@" << on_prob_ << "/" << off_prob_;
  return id.str();
}

HashLinearVictim::HashLinearVictim(std::uint64_t seed, std::size_t buckets,
                                   double bias, double weight_scale)
    : seed_(seed), bias_(bias), weight_scale_(weight_scale) {
  if (buckets == 0) throw PreconditionError("hash victim needs buckets > 0");
  std::mt19937_64 rng(seed);
  weights_.reserve(buckets);
  for (std::size_t i = 0; i < buckets; ++i) {
    // 53 random bits -> [0, 1); std:: distributions are not portable.
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    weights_.push_back((2.0 * unit - 1.0) * weight_scale);
  }
}

double HashLinearVictim::Logit(std::string_view text) const {
  double logit = bias_;
  for (const Token& token : Tokenize(text)) {
    logit += weights_[Fnv1a64(utf8::AsciiLower(token.text)) % weights_.size()];
  }
  return logit;
}

VictimVerdict HashLinearVictim::Classify(std::string_view text) {
  const double p1 = 1.0 / (1.0 + std::exp(-Logit(text)));
  return VictimVerdict::FromProbabilities(1.0 - p1, p1);
}

std::string HashLinearVictim::Identity() const {
  std::ostringstream id;
  id << "hash:seed=" << seed_ << ",buckets=" << weights_.size()
     << ",bias=" << bias_ << ",scale=" << weight_scale_;
  return id.str();
}

HttpVictim::HttpVictim(HttpVictimOptions options)
    : options_(std::move(options)) {
  internal::ParseUrl(options_.url);
}

VictimVerdict HttpVictim::Classify(std::string_view text) {
  internal::Headers headers;
  if (!options_.auth_header_name.empty()) {
    headers.emplace_back(options_.auth_header_name, options_.auth_header_value);
  }
  const nlohmann::json reply = internal::PostJson(
      options_.url, {{"text", std::string(text)}}, options_.timeout, headers);
  if (!reply.is_object() || !reply.contains("label") ||
      !reply["label"].is_number_integer() || !reply.contains("probabilities") ||
      !reply["probabilities"].is_array() ||
      reply["probabilities"].size() != 2 ||
      !reply["probabilities"][0].is_number() ||
      !reply["probabilities"][1].is_number()) {
    throw MalformedResponse(
        "victim reply must be {\"label\": int, "
        "\"probabilities\": [number, number]}");
  }
  VictimVerdict verdict{reply["label"].get<int>(),
                        {reply["probabilities"][0].get<double>(),
                         reply["probabilities"][1].get<double>()}};
  verdict.Validate();
  return verdict;
}

std::string HttpVictim::Identity() const { return "http:" + options_.url; }

QueryMeter::QueryMeter(int limit) : limit_(limit) {
  if (limit < 1) throw PreconditionError("query budget must be >= 1");
}

void QueryMeter::Consume() {
  int current = used_.load();
  do {
    if (current >= limit_) throw BudgetExhausted();
  } while (!used_.compare_exchange_weak(current, current + 1));
}

VictimVerdict MeteredClassify(QueryMeter& meter, Victim& victim,
                              std::string_view text) {
  meter.Consume();
  return victim.Classify(text);
}

}  // namespace repattack
