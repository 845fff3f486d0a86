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

#ifndef REPATTACK_TESTS_FIXTURES_H_
#define REPATTACK_TESTS_FIXTURES_H_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "repattack/rephraser.h"

namespace repattack::testing {

// Random multi-sentence documents with commas, quotes, dashes, newlines,
// abbreviations and multi-byte words.
inline std::string RandomDocument(std::mt19937_64& rng) {
  static const std::vector<std::string> kWords = {
      "the",         "price",        "of",
      "food",        "rose",         "sharply",
      "caf\xc3\xa9", "na\xc3\xafve", "Dr.",
      "U.S.",        "e.g.",         "well-known",
      "don't",       "market",       "\xe2\x80\x94",
      "-",           "\"quoted\"",   "\xe2\x80\x9csmart\xe2\x80\x9d",
      "experts",     "warned",       "that",
      "officials",   "2024",         "rates"};
  std::uniform_int_distribution<int> sentences(3, 8);
  std::uniform_int_distribution<int> words(3, 30);
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  std::string doc;
  const int n = sentences(rng);
  for (int s = 0; s < n; ++s) {
    if (s > 0) doc += coin(rng) == 0 ? "\n" : " ";
    doc += coin(rng) < 5 ? "The" : "Experts";
    const int w = words(rng);
    for (int i = 0; i < w; ++i) {
      doc += ' ';
      doc += kWords[pick(rng)];
      const int c = coin(rng);
      if (c == 0) doc += ',';
      if (c == 1) doc += ':';
    }
    doc += coin(rng) < 8 ? "." : "?";
  }
  return doc;
}

// A long paragraph with many replaceable words and its synonym table.
struct SynonymFixture {
  std::string text;
  StubBackend::SynonymTable table;
};

inline SynonymFixture ManySynonyms() {
  SynonymFixture f;
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"analysts", "experts"},    {"warned", "cautioned"},
      {"prices", "costs"},        {"rapidly", "quickly"},
      {"markets", "exchanges"},   {"growth", "expansion"},
      {"slowed", "eased"},        {"shoppers", "buyers"},
      {"cities", "towns"},        {"reported", "noted"},
      {"higher", "greater"},      {"rents", "leases"},
      {"families", "households"}, {"budgets", "finances"},
      {"winter", "season"},       {"heating", "warming"},
      {"bills", "charges"},       {"officials", "leaders"},
      {"promised", "pledged"},    {"support", "assistance"}};
  f.text =
      "Analysts warned that prices rose rapidly across markets while growth "
      "slowed.\nShoppers in cities reported higher rents and families cut "
      "budgets.\nThis winter heating bills climbed and officials promised "
      "support.";
  f.table = pairs;
  return f;
}

}  // namespace repattack::testing

#endif  // REPATTACK_TESTS_FIXTURES_H_
