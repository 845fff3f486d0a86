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
#include "repattack/segmentation.h"

#include <algorithm>
#include <array>

#include "repattack/error.h"
#include "repattack/utf8.h"

namespace repattack {
namespace {

bool IsAsciiAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool IsUpperOrDigit(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool IsSentenceFinal(char c) { return c == '.' || c == '!' || c == '?'; }

// [begin, end) of `text` with surrounding whitespace removed.
Span TrimmedSpan(std::string_view text, std::size_t begin, std::size_t end) {
  auto [b, e] = utf8::TrimRange(text.substr(begin, end - begin));
  return {begin + b, begin + e};
}

bool EndsWithAbbreviation(std::string_view text, std::size_t period_pos) {
  std::size_t word_begin = period_pos;
  while (word_begin > 0 && !utf8::IsAsciiSpace(text[word_begin - 1])) {
    --word_begin;
  }
  const std::string_view word =
      text.substr(word_begin, period_pos + 1 - word_begin);
  const auto& abbreviations = SentenceAbbreviations();
  return std::find(abbreviations.begin(), abbreviations.end(), word) !=
         abbreviations.end();
}

enum class BoundaryKind { kNone, kAfter, kQuote, kWordInternal };

struct BoundaryChar {
  std::string_view bytes;
  BoundaryKind kind;
};

// Apostrophes and hyphens double as word-internal characters ("don't",
// "well-known"); they only count when not flanked by alphanumerics.
constexpr std::array<BoundaryChar, 11> kPhraseBoundaries = {{
    {",", BoundaryKind::kAfter},
    {":", BoundaryKind::kAfter},
    {"\"", BoundaryKind::kQuote},
    {"'", BoundaryKind::kWordInternal},
    {"-", BoundaryKind::kWordInternal},
    {"–", BoundaryKind::kAfter},         // en dash
    {"—", BoundaryKind::kAfter},         // em dash
    {"“", BoundaryKind::kQuote},         // left double quote
    {"”", BoundaryKind::kQuote},         // right double quote
    {"‘", BoundaryKind::kQuote},         // left single quote
    {"’", BoundaryKind::kWordInternal},  // right single quote
}};

// Candidate split positions inside `text`, ascending, unique.
std::vector<std::size_t> PhraseSplitPoints(std::string_view text) {
  std::vector<std::size_t> points;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t len =
        utf8::SequenceLength(static_cast<unsigned char>(text[i]));
    const std::string_view ch = text.substr(i, len);
    for (const auto& boundary : kPhraseBoundaries) {
      if (ch != boundary.bytes) continue;
      const bool after_space = i == 0 || utf8::IsAsciiSpace(text[i - 1]);
      switch (boundary.kind) {
        case BoundaryKind::kAfter:
          points.push_back(i + len);
          break;
        case BoundaryKind::kQuote:
          // Opening quotes start the next piece; closing quotes end this one.
          points.push_back(after_space ? i : i + len);
          break;
        case BoundaryKind::kWordInternal: {
          const bool left_alnum = i > 0 && IsAsciiAlnum(text[i - 1]);
          const bool right_alnum =
              i + len < text.size() && IsAsciiAlnum(text[i + len]);
          if (!(left_alnum && right_alnum)) {
            points.push_back(after_space && right_alnum ? i : i + len);
          }
          break;
        }
        case BoundaryKind::kNone:
          break;
      }
      break;
    }
    i += len;
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

void AppendFragments(std::string_view input, std::size_t begin, std::size_t end,
                     const TaskProfile& profile, std::vector<Fragment>& out) {
  // Newlines.
  std::size_t line_begin = begin;
  while (line_begin <= end) {
    std::size_t line_end = input.find('\n', line_begin);
    if (line_end == std::string_view::npos || line_end > end) line_end = end;
    const std::string_view line =
        input.substr(line_begin, line_end - line_begin);
    for (const Span& sentence : SplitSentences(line)) {
      const std::string_view sentence_text =
          line.substr(sentence.begin, sentence.size());
      for (const Span& phrase :
           SplitPhrases(sentence_text, profile.min_phrase_len)) {
        const std::size_t offset = line_begin + sentence.begin + phrase.begin;
        out.push_back(Fragment{std::string(input.substr(offset, phrase.size())),
                               offset, phrase.size()});
      }
    }
    if (line_end == end) break;
    line_begin = line_end + 1;
  }
}

}  // namespace

std::string_view TaskIdName(TaskId id) {
  switch (id) {
    case TaskId::kPR:
      return "PR";
    case TaskId::kFC:
      return "FC";
    case TaskId::kRD:
      return "RD";
    case TaskId::kHN:
      return "HN";
    case TaskId::kGeneric:
      return "GENERIC";
  }
  return "GENERIC";
}

TaskId ParseTaskId(std::string_view name) {
  const std::string upper = [&] {
    std::string s(name);
    for (char& c : s) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return s;
  }();
  if (upper == "PR") return TaskId::kPR;
  if (upper == "FC") return TaskId::kFC;
  if (upper == "RD") return TaskId::kRD;
  if (upper == "HN") return TaskId::kHN;
  if (upper == "GENERIC" || upper.empty()) return TaskId::kGeneric;
  throw PreconditionError("unknown task id: " + std::string(name));
}

void TaskProfile::Validate() const {
  if (min_phrase_len <= 0) {
    throw PreconditionError("min_phrase_len must be positive");
  }
  if (task_id == TaskId::kFC && record_separator.empty()) {
    throw PreconditionError("FC profile requires a record separator");
  }
}

TaskProfile TaskProfile::For(TaskId id) {
  TaskProfile profile;
  profile.task_id = id;
  return profile;
}

const std::vector<std::string_view>& SentenceAbbreviations() {
  static const std::vector<std::string_view> kList = {
      "Dr.", "Mr.", "Mrs.", "Ms.", "St.", "U.S.", "e.g.", "i.e.", "etc."};
  return kList;
}

std::vector<Span> SplitSentences(std::string_view text) {
  std::vector<Span> spans;
  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (!IsSentenceFinal(text[i]) || !utf8::IsAsciiSpace(text[i + 1])) {
      continue;
    }
    std::size_t next = i + 1;
    while (next < text.size() && utf8::IsAsciiSpace(text[next])) ++next;
    if (next == text.size() || !IsUpperOrDigit(text[next])) continue;
    if (text[i] == '.' && EndsWithAbbreviation(text, i)) continue;
    const Span piece = TrimmedSpan(text, start, i + 1);
    if (!piece.empty()) spans.push_back(piece);
    start = next;
  }
  const Span tail = TrimmedSpan(text, start, text.size());
  if (!tail.empty()) spans.push_back(tail);
  return spans;
}

std::vector<Span> SplitPhrases(std::string_view span, int min_len) {
  if (min_len <= 0) throw PreconditionError("min_len must be positive");
  const auto min_chars = static_cast<std::size_t>(min_len);
  std::vector<Span> pieces;
  std::size_t start = 0;
  for (std::size_t point : PhraseSplitPoints(span)) {
    if (point <= start || point >= span.size()) continue;
    const Span left = TrimmedSpan(span, start, point);
    const Span rest = TrimmedSpan(span, point, span.size());
    if (utf8::Length(span.substr(left.begin, left.size())) < min_chars ||
        utf8::Length(span.substr(rest.begin, rest.size())) < min_chars) {
      continue;
    }
    pieces.push_back(left);
    start = point;
  }
  const Span tail = TrimmedSpan(span, start, span.size());
  if (!tail.empty()) pieces.push_back(tail);
  return pieces;
}

std::vector<Fragment> SplitInput(std::string_view text,
                                 const TaskProfile& profile) {
  profile.Validate();
  utf8::Validate(text);
  std::vector<Fragment> fragments;
  if (profile.task_id == TaskId::kFC) {
    const std::string_view sep = profile.record_separator;
    std::size_t part_begin = 0;
    while (true) {
      const std::size_t found = text.find(sep, part_begin);
      const std::size_t part_end =
          found == std::string_view::npos ? text.size() : found;
      AppendFragments(text, part_begin, part_end, profile, fragments);
      if (found == std::string_view::npos) break;
      part_begin = found + sep.size();
    }
  } else {
    AppendFragments(text, 0, text.size(), profile, fragments);
  }
  return fragments;
}

}  // namespace repattack
