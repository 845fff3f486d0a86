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
#ifndef REPATTACK_CHANGE_EXTRACTION_H_
#define REPATTACK_CHANGE_EXTRACTION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "repattack/rephraser.h"
#include "repattack/segmentation.h"

namespace repattack {

struct Token {
  std::string text;
  std::size_t start = 0;  // byte offset, inclusive
  std::size_t end = 0;    // byte offset, exclusive

  friend bool operator==(const Token&, const Token&) = default;
};

// Whitespace-delimited tokens with . , ; : ! ? " ' ( ) – — - detached as
// single-character tokens.
std::vector<Token> Tokenize(std::string_view text);

enum class EditKind { kKeep, kAdd, kDelete, kReplace };

std::string_view EditKindName(EditKind kind);

// One step of an edit script. Ranges are token indices, half-open.
struct EditOp {
  EditKind kind = EditKind::kKeep;
  std::size_t source_begin = 0;
  std::size_t source_end = 0;
  std::size_t target_begin = 0;
  std::size_t target_end = 0;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

// Minimum-cost script (unit ADD/DELETE/REPLACE, free KEEP) turning `a` into
// `b`, one op per token step. Among minimal scripts the backtrace prefers
// keep > replace > delete > add, walking from the end of both sequences.
std::vector<EditOp> EditScript(const std::vector<Token>& a,
                               const std::vector<Token>& b);

// Number of non-KEEP ops.
std::size_t ScriptCost(const std::vector<EditOp>& script);

// Token-text sequence obtained by running `script` over `a`, reading
// inserted and replacing tokens from `b`.
std::vector<std::string> ApplyScript(const std::vector<EditOp>& script,
                                     const std::vector<Token>& a,
                                     const std::vector<Token>& b);

struct ChangeOrigin {
  std::size_t fragment_index = 0;
  std::size_t rephrasing_index = 0;
  PromptKind prompt_kind = PromptKind::kRephrase;

  friend bool operator==(const ChangeOrigin&, const ChangeOrigin&) = default;
};

// An atomic edit of the whole input: bytes [span_start, span_end) become
// `replacement`.
struct Change {
  std::size_t span_start = 0;
  std::size_t span_end = 0;
  std::string original;  // the replaced slice
  std::string replacement;
  ChangeOrigin origin;
  // Op composition of the aggregated run.
  int adds = 0;
  int deletes = 0;
  int replaces = 0;

  std::size_t span_size() const { return span_end - span_start; }
  bool only_adds() const { return adds > 0 && deletes == 0 && replaces == 0; }
  bool only_deletes() const {
    return deletes > 0 && adds == 0 && replaces == 0;
  }

  friend bool operator==(const Change&, const Change&) = default;
};

// Merges maximal runs of non-KEEP ops into Changes in whole-input
// coordinates. The replacement is the rephrasing's text between the first
// and last target token of the run, so original spacing survives. Pure
// insertions become empty spans carrying a separating space.
std::vector<Change> Aggregate(const std::vector<EditOp>& script,
                              const Fragment& fragment,
                              std::string_view rephrasing,
                              ChangeOrigin origin = {});

// Drops ADD-only and DELETE-only changes and changes whose replaced slice
// holds more than 2/3 of `fragment_chars` or 1/3 of `text_chars` characters.
std::vector<Change> FilterChanges(std::vector<Change> changes,
                                  std::size_t fragment_chars,
                                  std::size_t text_chars);

// Tokenize + EditScript + Aggregate for one (fragment, rephrasing) pair.
std::vector<Change> ExtractChanges(const Fragment& fragment,
                                   std::string_view rephrasing,
                                   ChangeOrigin origin = {});

}  // namespace repattack

#endif  // REPATTACK_CHANGE_EXTRACTION_H_
