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
#include "repattack/attack_engine.h"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_set>

#include "repattack/error.h"
#include "repattack/hashing.h"
#include "repattack/utf8.h"

namespace repattack {
namespace {

struct Region {
  std::size_t start;
  std::size_t end;
};

bool RegionsConflict(Region a, Region b) {
  if (a.start == a.end) return b.start <= a.start && a.start <= b.end;
  if (b.start == b.end) return a.start <= b.start && b.start <= a.end;
  return a.start < b.end && b.start < a.end;
}

Region RegionOf(const Change& c) { return {c.span_start, c.span_end}; }

// Position in the rendered text of a base position that no applied change
// covers.
std::size_t MapPosition(std::size_t pos, const std::vector<Change>& applied) {
  long long shift = 0;
  for (const Change& c : applied) {
    if (c.span_end <= pos &&
        !(c.span_start == c.span_end && c.span_start == pos)) {
      shift += static_cast<long long>(c.replacement.size()) -
               static_cast<long long>(c.span_size());
    }
  }
  return static_cast<std::size_t>(static_cast<long long>(pos) + shift);
}

// Regions of `variant.rendered` that must stay untouched after a restart:
// the variant's own edits plus earlier locks carried through them.
std::vector<Region> LockedRegions(const Variant& variant,
                                  const std::vector<Region>& earlier) {
  std::vector<Region> locked;
  for (const Region& r : earlier) {
    locked.push_back({MapPosition(r.start, variant.applied),
                      MapPosition(r.end, variant.applied)});
  }
  for (const Change& c : variant.applied) {
    const std::size_t start = MapPosition(c.span_start, variant.applied);
    locked.push_back({start, start + c.replacement.size()});
  }
  return locked;
}

}  // namespace

bool SpansConflict(const Change& a, const Change& b) {
  return RegionsConflict(RegionOf(a), RegionOf(b));
}

std::string RenderChanges(std::string_view base, std::vector<Change> changes) {
  std::sort(changes.begin(), changes.end(),
            [](const Change& a, const Change& b) {
              return std::tie(a.span_start, a.span_end) <
                     std::tie(b.span_start, b.span_end);
            });
  for (std::size_t i = 0; i < changes.size(); ++i) {
    if (changes[i].span_start > changes[i].span_end ||
        changes[i].span_end > base.size()) {
      throw PreconditionError("change span outside the base text");
    }
    if (i > 0 && SpansConflict(changes[i - 1], changes[i])) {
      throw PreconditionError("overlapping changes cannot be rendered");
    }
  }
  std::string out(base);
  for (auto it = changes.rbegin(); it != changes.rend(); ++it) {
    out.replace(it->span_start, it->span_size(), it->replacement);
  }
  return out;
}

Variant Variant::Original(std::string base) {
  Variant v;
  v.base = std::make_shared<const std::string>(std::move(base));
  v.rendered = *v.base;
  return v;
}

bool Applicable(const Variant& variant, const Change& change) {
  return std::none_of(
      variant.applied.begin(), variant.applied.end(),
      [&](const Change& applied) { return SpansConflict(applied, change); });
}

Variant ApplyChange(const Variant& variant, const Change& change) {
  if (!Applicable(variant, change)) {
    throw PreconditionError("change overlaps an already modified region");
  }
  if (!variant.base || change.span_end > variant.base->size() ||
      change.span_start > change.span_end) {
    throw PreconditionError("change span outside the base text");
  }
  Variant next;
  next.base = variant.base;
  next.applied = variant.applied;
  const auto pos =
      std::upper_bound(next.applied.begin(), next.applied.end(), change,
                       [](const Change& a, const Change& b) {
                         return a.span_start < b.span_start;
                       });
  next.applied.insert(pos, change);
  next.rendered = RenderChanges(*next.base, next.applied);
  return next;
}

bool RanksBefore(const Variant& a, const Variant& b) {
  const double pa = a.orig_class_prob.value_or(1.0);
  const double pb = b.orig_class_prob.value_or(1.0);
  if (pa != pb) return pa < pb;
  if (a.applied.size() != b.applied.size()) {
    return a.applied.size() < b.applied.size();
  }
  return a.rendered < b.rendered;
}

Beam::Beam(std::size_t width) : width_(width) {
  if (width == 0) throw PreconditionError("beam width must be >= 1");
}

void Beam::Insert(Variant variant) {
  for (const Variant& e : entries_) {
    if (e.rendered == variant.rendered) return;
  }
  const auto pos =
      std::upper_bound(entries_.begin(), entries_.end(), variant, RanksBefore);
  if (static_cast<std::size_t>(pos - entries_.begin()) >= width_) return;
  entries_.insert(pos, std::move(variant));
  if (entries_.size() > width_) entries_.pop_back();
}

VictimSession::VictimSession(Victim& victim, int budget)
    : victim_(victim), meter_(budget) {}

const VictimVerdict& VictimSession::Query(const std::string& text) {
  if (auto it = cache_.find(text); it != cache_.end()) return it->second;
  meter_.Consume();
  VictimVerdict verdict = victim_.Classify(text);
  verdict.Validate();
  log_.emplace_back(HexDigest(text), verdict);
  return cache_.emplace(text, verdict).first->second;
}

bool VictimSession::Contains(const std::string& text) const {
  return cache_.count(text) > 0;
}

const VictimVerdict* VictimSession::Cached(const std::string& text) const {
  auto it = cache_.find(text);
  return it == cache_.end() ? nullptr : &it->second;
}

BeamSearchResult RunBeamSearch(const Variant& root,
                               const std::vector<Change>& pool,
                               std::size_t beam_width, int original_label,
                               VictimSession& session,
                               SearchObserver* observer) {
  if (!root.orig_class_prob) {
    throw PreconditionError("beam search root must be scored");
  }
  Beam beam(beam_width);
  beam.Insert(root);
  BeamSearchResult result;
  if (observer) observer->OnBeam(0, beam);

  while (true) {
    std::vector<Variant> successors;
    std::unordered_set<std::string> this_round;
    const std::vector<Variant> parents = beam.entries();
    for (const Variant& parent : parents) {
      for (const Change& change : pool) {
        if (!Applicable(parent, change)) continue;
        Variant next = ApplyChange(parent, change);
        if (observer) observer->OnVariant(next);
        if (session.Contains(next.rendered) ||
            !this_round.insert(next.rendered).second) {
          continue;
        }
        VictimVerdict verdict;
        try {
          verdict = session.Query(next.rendered);
        } catch (const BudgetExhausted&) {
          result.status = BeamSearchResult::Status::kBudgetExhausted;
          result.best = beam.best();
          return result;
        }
        next.orig_class_prob = verdict.probabilities[original_label];
        if (verdict.label != original_label) {
          result.status = BeamSearchResult::Status::kFlipped;
          result.best = std::move(next);
          return result;
        }
        successors.push_back(std::move(next));
      }
    }
    if (successors.empty()) {
      result.status = BeamSearchResult::Status::kPoolExhausted;
      result.best = beam.best();
      return result;
    }
    for (Variant& s : successors) beam.Insert(std::move(s));
    ++result.iterations;
    if (observer) observer->OnBeam(result.iterations, beam);
  }
}

void AttackConfig::Validate() const {
  if (budget < 1) throw PreconditionError("budget must be >= 1");
  if (beam_width < 1) throw PreconditionError("beam width must be >= 1");
  if (max_restarts < 0) throw PreconditionError("max_restarts must be >= 0");
  if (prompt_kinds.empty()) {
    throw PreconditionError("at least one prompt kind is required");
  }
}

std::vector<Change> BuildChangePool(std::string_view text,
                                    const TaskProfile& profile,
                                    RephraseBackend& backend,
                                    const std::vector<PromptKind>& kinds,
                                    const RetryPolicy& retry) {
  const std::vector<Fragment> fragments = SplitInput(text, profile);
  const std::size_t text_chars = utf8::Length(text);
  std::vector<Change> pool;
  std::set<std::tuple<std::size_t, std::size_t, std::string>> seen;
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const Fragment& fragment = fragments[f];
    const std::size_t fragment_chars = utf8::Length(fragment.text);
    for (PromptKind kind : kinds) {
      const std::vector<std::string> rephrasings =
          RequestRephrasings(backend, kind, fragment, retry);
      for (std::size_t r = 0; r < rephrasings.size(); ++r) {
        std::vector<Change> changes = FilterChanges(
            ExtractChanges(fragment, rephrasings[r], ChangeOrigin{f, r, kind}),
            fragment_chars, text_chars);
        for (Change& c : changes) {
          if (seen.emplace(c.span_start, c.span_end, c.replacement).second) {
            pool.push_back(std::move(c));
          }
        }
      }
    }
  }
  return pool;
}

AttackOutcome RunAttack(std::string_view input, int true_label, Victim& victim,
                        RephraseBackend& backend, const TaskProfile& profile,
                        const AttackConfig& config, SearchObserver* observer) {
  config.Validate();
  AttackOutcome outcome;
  outcome.true_label = true_label;
  outcome.best_variant = Variant::Original(std::string(input));

  VictimSession session(victim, config.budget);
  auto finish = [&](AttackOutcome& out) -> AttackOutcome& {
    out.queries_used = session.meter().used();
    const int label = out.original_verdict.label;
    for (const auto& [hash, verdict] : session.log()) {
      out.trace.push_back({hash, verdict.probabilities[label]});
    }
    if (const VictimVerdict* v = session.Cached(out.best_variant.rendered)) {
      out.final_verdict = *v;
    }
    return out;
  };

  try {
    outcome.original_verdict = session.Query(outcome.best_variant.rendered);
    const int label = outcome.original_verdict.label;
    outcome.best_variant.orig_class_prob =
        outcome.original_verdict.probabilities[label];

    Variant root = outcome.best_variant;
    std::vector<Region> locked;
    for (int attempt = 0;; ++attempt) {
      std::vector<Change> pool = BuildChangePool(
          root.rendered, profile, backend, config.prompt_kinds, config.retry);
      std::erase_if(pool, [&](const Change& c) {
        return std::any_of(locked.begin(), locked.end(), [&](Region r) {
          return RegionsConflict(RegionOf(c), r);
        });
      });

      BeamSearchResult search =
          RunBeamSearch(root, pool, static_cast<std::size_t>(config.beam_width),
                        label, session, observer);
      if (RanksBefore(search.best, outcome.best_variant) ||
          search.status == BeamSearchResult::Status::kFlipped) {
        outcome.best_variant = search.best;
      }
      if (search.status == BeamSearchResult::Status::kFlipped) {
        outcome.success = true;
        outcome.adversarial_text = search.best.rendered;
        return finish(outcome);
      }
      if (search.status == BeamSearchResult::Status::kBudgetExhausted ||
          attempt >= config.max_restarts || session.meter().exhausted()) {
        return finish(outcome);
      }
      // Restart from the best variant, in its own coordinates.
      ++outcome.restarts;
      locked = LockedRegions(search.best, locked);
      Variant next_root = Variant::Original(search.best.rendered);
      next_root.orig_class_prob = search.best.orig_class_prob;
      root = std::move(next_root);
    }
  } catch (const BudgetExhausted&) {
    return finish(outcome);
  } catch (const Error& e) {
    outcome.errored = true;
    outcome.error = e.what();
    return finish(outcome);
  }
}

}  // namespace repattack
