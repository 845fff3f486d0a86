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

#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "repattack/attack_engine.h"
#include "repattack/change_extraction.h"
#include "repattack/evaluation.h"
#include "repattack/rephraser.h"
#include "repattack/segmentation.h"
#include "repattack/victims.h"

namespace repattack {
namespace {

constexpr char kParagraph[] =
    "Analysts warned that prices rose rapidly across markets while growth "
    "slowed, and shoppers in cities reported higher rents. Families cut "
    "budgets as heating bills climbed; officials promised support, but the "
    "details remained unclear.\nMany households said the situation was "
    "alarming.";

std::string RandomWords(std::mt19937_64& rng, int words) {
  static const std::vector<std::string> kWords = {
      "the",   "price",   "of",     "food", "rose",      "sharply", "market",
      "rates", "experts", "warned", "that", "officials", ",",       "."};
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  std::string out;
  for (int i = 0; i < words; ++i) {
    if (i > 0) out += ' ';
    out += kWords[pick(rng)];
  }
  return out;
}

void BM_EditScript(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int words = static_cast<int>(state.range(0));
  const auto a = Tokenize(RandomWords(rng, words));
  const auto b = Tokenize(RandomWords(rng, words));
  for (auto _ : state) benchmark::DoNotOptimize(EditScript(a, b));
  state.SetComplexityN(words);
}
BENCHMARK(BM_EditScript)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_Levenshtein(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int words = static_cast<int>(state.range(0));
  const std::string a = RandomWords(rng, words);
  const std::string b = RandomWords(rng, words);
  for (auto _ : state) benchmark::DoNotOptimize(Levenshtein(a, b));
}
BENCHMARK(BM_Levenshtein)->RangeMultiplier(4)->Range(8, 512);

void BM_SplitInput(benchmark::State& state) {
  std::string doc;
  for (int i = 0; i < state.range(0); ++i)
    doc += std::string(kParagraph) + "\n";
  const TaskProfile profile;
  for (auto _ : state) benchmark::DoNotOptimize(SplitInput(doc, profile));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(doc.size()));
}
BENCHMARK(BM_SplitInput)->Arg(1)->Arg(16)->Arg(256);

void BM_RunAttack(benchmark::State& state) {
  StubBackend backend(StubBackend::SynonymTable{{"alarming", "notable"},
                                                {"prices", "costs"},
                                                {"rapidly", "quickly"},
                                                {"support", "assistance"}});
  AttackConfig config;
  config.budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HashLinearVictim victim(3, 1024, 50.0);
    benchmark::DoNotOptimize(
        RunAttack(kParagraph, 1, victim, backend, TaskProfile{}, config));
  }
}
BENCHMARK(BM_RunAttack)->Arg(10)->Arg(50)->Arg(200);

}  // namespace
}  // namespace repattack

BENCHMARK_MAIN();
