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
#ifndef REPATTACK_ATTACK_ENGINE_H_
#define REPATTACK_ATTACK_ENGINE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "repattack/change_extraction.h"
#include "repattack/rephraser.h"
#include "repattack/segmentation.h"
#include "repattack/victims.h"

namespace repattack {

// True iff the two edits touch a common byte. Empty spans (insertions)
// conflict with any span that contains or borders their position, so
// rendering stays order-independent.
bool SpansConflict(const Change& a, const Change& b);

// Splices `changes` into `base` right-to-left after sorting by position.
// Throws PreconditionError if two changes conflict or a span is out of range.
std::string RenderChanges(std::string_view base, std::vector<Change> changes);

// The base text with a set of pairwise non-conflicting changes applied.
struct Variant {
  std::shared_ptr<const std::string> base;
  std::vector<Change> applied;  // sorted by span_start
  std::string rendered;
  std::optional<double> orig_class_prob;

  static Variant Original(std::string base);
};

bool Applicable(const Variant& variant, const Change& change);

// Throws PreconditionError unless Applicable(variant, change). The returned
// variant has no probability yet.
Variant ApplyChange(const Variant& variant, const Change& change);

// Higher is better; may be negative.
inline double ScoreReduction(double original_prob, double variant_prob) {
  return original_prob - variant_prob;
}

// Beam order: lower original-class probability first, then fewer applied
// changes, then the lexicographically smaller rendered text.
bool RanksBefore(const Variant& a, const Variant& b);

class Beam {
 public:
  explicit Beam(std::size_t width);

  // Inserts a scored variant, keeping order and at most width() entries.
  // A variant whose rendered text is already present is ignored.
  void Insert(Variant variant);

  const std::vector<Variant>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t width() const { return width_; }
  bool empty() const { return entries_.empty(); }
  const Variant& best() const { return entries_.front(); }

 private:
  std::size_t width_;
  std::vector<Variant> entries_;
};

struct TraceEntry {
  std::string text_hash;  // HexDigest of the rendered text
  double orig_class_prob = 0.0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// A metered, cached view of the victim for one attack run. Re-querying a
// text seen before is answered from the cache without spending budget.
class VictimSession {
 public:
  VictimSession(Victim& victim, int budget);

  // Throws BudgetExhausted, TransportError or MalformedResponse.
  const VictimVerdict& Query(const std::string& text);

  bool Contains(const std::string& text) const;
  const VictimVerdict* Cached(const std::string& text) const;

  const QueryMeter& meter() const { return meter_; }
  // One (hash, verdict) per metered query, in query order.
  const std::vector<std::pair<std::string, VictimVerdict>>& log() const {
    return log_;
  }

 private:
  Victim& victim_;
  QueryMeter meter_;
  std::unordered_map<std::string, VictimVerdict> cache_;
  std::vector<std::pair<std::string, VictimVerdict>> log_;
};

// Hooks for tests and diagnostics.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void OnVariant(const Variant& /*variant*/) {}
  // Called with the beam at the start of the search and after every
  // iteration.
  virtual void OnBeam(int /*iteration*/, const Beam& /*beam*/) {}
};

struct BeamSearchResult {
  enum class Status { kFlipped, kPoolExhausted, kBudgetExhausted };

  Status status = Status::kPoolExhausted;
  Variant best;  // flipping variant when status == kFlipped
  int iterations = 0;
};

// Expands every beam entry with every applicable pool change, queries each
// previously unseen successor, and keeps the beam_width best of the old
// beam and the successors. `root` must already carry its probability.
BeamSearchResult RunBeamSearch(const Variant& root,
                               const std::vector<Change>& pool,
                               std::size_t beam_width, int original_label,
                               VictimSession& session,
                               SearchObserver* observer = nullptr);

struct AttackConfig {
  int budget = 50;
  int beam_width = 5;
  std::vector<PromptKind> prompt_kinds = {PromptKind::kRephrase};
  int max_restarts = 3;
  RetryPolicy retry;

  void Validate() const;
};

// Rephrases every fragment of `text` with every configured prompt kind and
// returns the filtered, de-duplicated changes in generation order (fragment,
// prompt kind, rephrasing, position).
std::vector<Change> BuildChangePool(std::string_view text,
                                    const TaskProfile& profile,
                                    RephraseBackend& backend,
                                    const std::vector<PromptKind>& kinds,
                                    const RetryPolicy& retry = {});

struct AttackOutcome {
  bool success = false;
  bool errored = false;
  std::string error;
  std::optional<std::string> adversarial_text;
  int true_label = 0;
  int queries_used = 0;
  int restarts = 0;
  VictimVerdict original_verdict;
  VictimVerdict final_verdict;  // verdict for best_variant.rendered
  Variant best_variant;
  std::vector<TraceEntry> trace;
};

AttackOutcome RunAttack(std::string_view input, int true_label, Victim& victim,
                        RephraseBackend& backend, const TaskProfile& profile,
                        const AttackConfig& config,
                        SearchObserver* observer = nullptr);

}  // namespace repattack

#endif  // REPATTACK_ATTACK_ENGINE_H_
