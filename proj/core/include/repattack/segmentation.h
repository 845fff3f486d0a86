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
#ifndef REPATTACK_SEGMENTATION_H_
#define REPATTACK_SEGMENTATION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace repattack {

// Task families of the misinformation benchmarks. Only FC inputs carry a
// claim/evidence record separator.
enum class TaskId { kPR, kFC, kRD, kHN, kGeneric };

std::string_view TaskIdName(TaskId id);
// Accepts "PR", "FC", "RD", "HN", "GENERIC" (case-insensitive).
TaskId ParseTaskId(std::string_view name);

struct TaskProfile {
  TaskId task_id = TaskId::kGeneric;
  std::string record_separator = "\t";
  int min_phrase_len = 60;  // characters

  // Throws PreconditionError when the invariants do not hold.
  void Validate() const;

  static TaskProfile For(TaskId id);
};

// Half-open byte range [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  friend bool operator==(const Span&, const Span&) = default;
};

// A contiguous slice of the input. input.substr(offset, length) == text.
struct Fragment {
  std::string text;
  std::size_t offset = 0;
  std::size_t length = 0;

  std::size_t end() const { return offset + length; }
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

// Closed abbreviation list consulted by SplitSentences.
const std::vector<std::string_view>& SentenceAbbreviations();

// Sentence spans relative to `text`, trimmed of surrounding whitespace.
// A boundary falls after '.', '!' or '?' that is followed by whitespace and
// then an ASCII uppercase letter or digit, unless the word ending in '.' is
// a listed abbreviation.
std::vector<Span> SplitSentences(std::string_view text);

// Splits `span` after phrase-boundary characters (dashes, quotation marks,
// commas, colons), accepting a split point only if both the piece it closes
// and the remainder hold at least `min_len` characters. Returns the span
// unsplit (trimmed) when no split point qualifies. Spans are relative to
// `span`. Whitespace-only input yields an empty list.
std::vector<Span> SplitPhrases(std::string_view span, int min_len);

// Full splitting cascade: record separator (FC only), newlines, sentences,
// phrases. Throws EncodingError for non-UTF-8 input.
std::vector<Fragment> SplitInput(std::string_view text,
                                 const TaskProfile& profile);

}  // namespace repattack

#endif  // REPATTACK_SEGMENTATION_H_
