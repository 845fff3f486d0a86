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

// Runs the acceptance checks and prints one PASS/FAIL line per check.
// Exits non-zero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "beam_properties.h"
#include "cli/commands.h"
#include "cli/run_config.h"
#include "fixtures.h"
#include "oracles.h"
#include "repattack/attack_engine.h"
#include "repattack/change_extraction.h"
#include "repattack/error.h"
#include "repattack/evaluation.h"
#include "repattack/report.h"
#include "repattack/segmentation.h"
#include "repattack/utf8.h"
#include "repattack/victims.h"
#include "test_util.h"

namespace repattack {
namespace {

using ::repattack::testing::BruteEditDistance;
using ::repattack::testing::CheckBeamInvariants;
using ::repattack::testing::ManySynonyms;
using ::repattack::testing::RandomDocument;
using ::repattack::testing::ReadFile;
using ::repattack::testing::SpliceOracle;
using ::repattack::testing::TempDir;
using ::repattack::testing::TestDataPath;

struct Result {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; the first few are kept as the detail message.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  void Note(const std::string& what) { info_ = what; }
  Result Finish() const {
    if (failures_ == 0) return {true, info_};
    std::ostringstream detail;
    detail << failures_ << " failure(s): " << notes_.str();
    return {false, detail.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
  std::string info_;
};

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<Token> Symbols(const std::vector<std::string>& texts) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  for (const std::string& t : texts) {
    tokens.push_back(Token{t, pos, pos + t.size()});
    pos += t.size() + 1;
  }
  return tokens;
}

// All strings over `alphabet` with length <= max_len, shortest first.
template <typename T>
std::vector<std::vector<T>> AllSequences(const std::vector<T>& alphabet,
                                         std::size_t max_len) {
  std::vector<std::vector<T>> out = {{}};
  for (std::size_t begin = 0, len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (const T& s : alphabet) {
        auto next = out[k];
        next.push_back(s);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

Result WorkedExample() {
  const auto start = std::chrono::steady_clock::now();
  const std::string original =
      "The recent rise of food prices is resulting in widespread discontent.";
  const std::string rephrased =
      "The recent surge in food prices has caused widespread unease.";
  Checker check;
  const auto changes =
      ExtractChanges(Fragment{original, 0, original.size()}, rephrased);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"rise of", "surge in"},
      {"is resulting in", "has caused"},
      {"discontent", "unease"}};
  check.Expect(changes.size() == expected.size(), "expected three changes");
  for (std::size_t i = 0; i < std::min(changes.size(), expected.size()); ++i) {
    check.Expect(changes[i].original == expected[i].first &&
                     changes[i].replacement == expected[i].second,
                 "change " + std::to_string(i) + " differs");
  }
  check.Expect(SpliceOracle(original, changes) == rephrased,
               "splice does not reproduce the rephrasing");
  check.Expect(RenderChanges(original, changes) == rephrased,
               "render does not reproduce the rephrasing");
  const double seconds = SecondsSince(start);
  check.Expect(seconds < 1.0, "took " + std::to_string(seconds) + " s");
  return check.Finish();
}

Result EditDistanceOracle() {
  Checker check;
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  const auto lists = AllSequences(alphabet, 4);
  long cases = 0;
  for (const auto& x : lists) {
    for (const auto& y : lists) {
      ++cases;
      const auto script = EditScript(Symbols(x), Symbols(y));
      check.Expect(ScriptCost(script) == BruteEditDistance(x, y),
                   "exhaustive mismatch");
      check.Expect(ApplyScript(script, Symbols(x), Symbols(y)) == y,
                   "script does not rebuild target");
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 1000; ++trial, ++cases) {
    std::vector<std::string> x(len(rng));
    std::vector<std::string> y(len(rng));
    for (auto& s : x) s = alphabet[pick(rng)];
    for (auto& s : y) s = alphabet[pick(rng)];
    const auto script = EditScript(Symbols(x), Symbols(y));
    check.Expect(ScriptCost(script) == BruteEditDistance(x, y),
                 "random mismatch at trial " + std::to_string(trial));
  }
  check.Note(std::to_string(cases) + " pairs");
  return check.Finish();
}

Result LevenshteinOracle() {
  Checker check;
  const auto seqs = AllSequences(std::vector<char>{'a', 'b', 'c'}, 6);
  std::vector<std::string> strings;
  for (const auto& s : seqs) strings.emplace_back(s.begin(), s.end());
  for (const std::string& a : strings) {
    for (const std::string& b : strings) {
      const std::size_t longest = std::max(a.size(), b.size());
      const double expected =
          longest == 0 ? 1.0
                       : 1.0 - static_cast<double>(BruteEditDistance(a, b)) /
                                   static_cast<double>(longest);
      check.Expect(std::abs(CharacterScore(a, b) - expected) <= 1e-12,
                   "mismatch on \"" + a + "\" vs \"" + b + "\"");
    }
  }
  check.Note(std::to_string(strings.size() * strings.size()) + " pairs");
  return check.Finish();
}

// Forwards to another victim and counts the calls that reach it.
class CountingVictim : public Victim {
 public:
  explicit CountingVictim(Victim& inner) : inner_(inner) {}
  VictimVerdict Classify(std::string_view text) override {
    ++calls_;
    return inner_.Classify(text);
  }
  std::string Identity() const override { return inner_.Identity(); }
  bool deterministic() const override { return inner_.deterministic(); }
  int calls() const { return calls_; }

 private:
  Victim& inner_;
  int calls_ = 0;
};

Result BudgetSafety() {
  Checker check;
  const auto fixture = ManySynonyms();
  StubBackend stub(fixture.table);
  AttackConfig config;
  config.budget = 50;
  config.retry.base_delay = std::chrono::milliseconds(1);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    HashLinearVictim never_flips(seed, 1024, 50.0);
    CountingVictim victim(never_flips);
    const AttackOutcome outcome =
        RunAttack(fixture.text, 1, victim, stub, TaskProfile{}, config);
    const std::string run = "seed " + std::to_string(seed) + ": ";
    check.Expect(outcome.queries_used == 50, run + "queries_used != 50");
    check.Expect(
        victim.calls() == 50,
        run + "victim called " + std::to_string(victim.calls()) + " times");
    check.Expect(!outcome.success && !outcome.errored,
                 run + "not a clean failure");
  }
  HashLinearVictim inner(1, 1024, 50.0);
  CountingVictim victim(inner);
  QueryMeter meter(50);
  for (int i = 0; i < 50; ++i) MeteredClassify(meter, victim, "x");
  bool stopped = false;
  try {
    MeteredClassify(meter, victim, "x");
  } catch (const BudgetExhausted&) {
    stopped = true;
  }
  check.Expect(stopped && victim.calls() == 50, "meter let a 51st call out");
  return check.Finish();
}

cli::RunConfig SyntheticConfig(const std::string& out) {
  cli::RunConfig c;
  c.dataset = TestDataPath("synthetic_20.jsonl");
  c.victim = "keyword:alarming,shocking,outrageous,terrifying,disastrous";
  c.backend = "stub-file:" + TestDataPath("synonyms.tsv");
  c.out = out;
  c.seed = 7;
  return c;
}

Result EndToEnd() {
  const auto start = std::chrono::steady_clock::now();
  Checker check;
  TempDir dir;
  std::ostringstream out;
  std::ostringstream err;
  const cli::RunConfig first = SyntheticConfig(dir.Sub("a"));
  const cli::RunConfig second = SyntheticConfig(dir.Sub("b"));
  check.Expect(cli::CmdAttack(first, out, err) == cli::kExitOk,
               "first run failed: " + err.str());
  check.Expect(cli::CmdAttack(second, out, err) == cli::kExitOk,
               "second run failed: " + err.str());
  try {
    const RunReport report = ReadReport(dir.Sub("a"));
    check.Expect(report.examples_count == 20, "expected 20 examples");
    check.Expect(report.confusion == 1.0, "confusion mean below 1.0");
    check.Expect(report.queries <= 5.0, "mean queries above 5");
    std::ostringstream note;
    note << "confusion " << report.confusion << ", mean queries "
         << report.queries;
    check.Note(note.str());
  } catch (const std::exception& e) {
    check.Expect(false, e.what());
  }
  check.Expect(cli::CmdVerify({dir.Sub("a"), first.victim, first.seed, 1000},
                              out, err) == cli::kExitOk,
               "verify failed");
  for (const char* file : {"examples.jsonl", "summary.json"}) {
    check.Expect(
        ReadFile(dir.path() / "a" / file) == ReadFile(dir.path() / "b" / file),
        std::string(file) + " differs between runs");
  }
  const double seconds = SecondsSince(start);
  check.Expect(seconds < 10.0, "took " + std::to_string(seconds) + " s");
  return check.Finish();
}

Result ScoreAlgebra() {
  Checker check;
  TempDir dir;
  std::ostringstream out;
  std::ostringstream err;
  cli::RunConfig full = SyntheticConfig(dir.Sub("full"));
  cli::RunConfig starved = SyntheticConfig(dir.Sub("starved"));
  starved.budget = 1;
  cli::RunConfig hashed = SyntheticConfig(dir.Sub("hashed"));
  hashed.victim = "hash:buckets=64";
  int records = 0;
  for (const cli::RunConfig* c : {&full, &starved, &hashed}) {
    check.Expect(cli::CmdAttack(*c, out, err) == cli::kExitOk,
                 "attack failed: " + err.str());
    try {
      for (const ExampleRecord& r : ReadReport(c->out).examples) {
        ++records;
        const ExampleScore& s = r.scores;
        check.Expect(s.bodega == s.confusion * s.semantic * s.character,
                     "bodega is not the product for " + r.id);
        if (s.confusion == 0) {
          check.Expect(s.bodega == 0, "confusion 0 with bodega != 0");
        }
      }
    } catch (const std::exception& e) {
      check.Expect(false, e.what());
    }
  }
  LexicalScorer scorer;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::string text = RandomDocument(rng);
    const ExampleScore s = ScorePair(text, text, 0, 1, scorer);
    check.Expect(s.character == 1.0 && s.semantic == 1.0,
                 "identical texts not scored 1/1");
  }
  check.Note(std::to_string(records) + " report records");
  return check.Finish();
}

Result BeamInvariants() {
  const testing::PropertyReport report = CheckBeamInvariants(1000, 20261018);
  Checker check;
  check.Expect(report.pools == 1000, "not every pool ran");
  for (const std::string& f : report.failures) check.Expect(false, f);
  check.Note(std::to_string(report.pools) + " pools, " +
             std::to_string(report.variants) + " variants");
  return check.Finish();
}

// Sentence spans of `doc` as absolute byte ranges, lines first.
std::vector<Span> SentenceSpans(const std::string& doc) {
  std::vector<Span> spans;
  std::size_t line_begin = 0;
  while (line_begin <= doc.size()) {
    std::size_t line_end = doc.find('\n', line_begin);
    if (line_end == std::string::npos) line_end = doc.size();
    const std::string_view line(doc.data() + line_begin, line_end - line_begin);
    for (const Span& s : SplitSentences(line)) {
      spans.push_back({line_begin + s.begin, line_begin + s.end});
    }
    line_begin = line_end + 1;
  }
  return spans;
}

Result SplittingFidelity() {
  Checker check;
  std::mt19937_64 rng(7);
  const TaskProfile profile;
  int split_sentences = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::string doc = RandomDocument(rng);
    const auto fragments = SplitInput(doc, profile);
    for (const Fragment& f : fragments) {
      check.Expect(doc.substr(f.offset, f.length) == f.text,
                   "offset round-trip failed");
    }
    // Fragments that share a sentence came from a phrase split.
    std::map<std::size_t, std::vector<const Fragment*>> by_sentence;
    const std::vector<Span> sentences = SentenceSpans(doc);
    for (const Fragment& f : fragments) {
      const auto it =
          std::find_if(sentences.begin(), sentences.end(), [&](const Span& s) {
            return s.begin <= f.offset && f.end() <= s.end;
          });
      check.Expect(it != sentences.end(), "fragment crosses a sentence");
      if (it != sentences.end()) {
        by_sentence[static_cast<std::size_t>(it - sentences.begin())].push_back(
            &f);
      }
    }
    for (const auto& [sentence, pieces] : by_sentence) {
      if (pieces.size() < 2) continue;
      ++split_sentences;
      for (const Fragment* f : pieces) {
        check.Expect(utf8::Length(f->text) >=
                         static_cast<std::size_t>(profile.min_phrase_len),
                     "phrase piece under the minimum: \"" + f->text + "\"");
      }
    }
  }
  check.Expect(split_sentences > 0, "no sentence was phrase-split");
  check.Note("100 documents, " + std::to_string(split_sentences) +
             " phrase-split sentences");
  return check.Finish();
}

}  // namespace
}  // namespace repattack

int main() {
  using repattack::Result;
  const std::vector<std::pair<std::string, std::function<Result()>>> checks = {
      {"worked-example", repattack::WorkedExample},
      {"edit-distance-oracle", repattack::EditDistanceOracle},
      {"levenshtein-oracle", repattack::LevenshteinOracle},
      {"budget-safety", repattack::BudgetSafety},
      {"end-to-end", repattack::EndToEnd},
      {"score-algebra", repattack::ScoreAlgebra},
      {"beam-invariants", repattack::BeamInvariants},
      {"splitting-fidelity", repattack::SplittingFidelity}};
  int failed = 0;
  for (const auto& [name, run] : checks) {
    Result result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result = {false, std::string("threw: ") + e.what()};
    }
    if (!result.pass) ++failed;
    std::printf("%s %s%s%s\n", result.pass ? "PASS" : "FAIL", name.c_str(),
                result.detail.empty() ? "" : " - ", result.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
