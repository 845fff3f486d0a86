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
#include "repattack/change_extraction.h"

#include <algorithm>
#include <array>

#include "repattack/error.h"
#include "repattack/utf8.h"

namespace repattack {
namespace {

constexpr std::array<std::string_view, 13> kDetachedPunctuation = {
    ".", ",", ";", ":", "!", "?", "\"", "'", "(", ")", "–", "—", "-"};

std::size_t PunctuationLength(std::string_view text, std::size_t pos) {
  for (std::string_view p : kDetachedPunctuation) {
    if (text.substr(pos, p.size()) == p) return p.size();
  }
  return 0;
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::size_t word_start = std::string_view::npos;
  auto flush = [&](std::size_t end) {
    if (word_start != std::string_view::npos && end > word_start) {
      tokens.push_back(
          Token{std::string(text.substr(word_start, end - word_start)),
                word_start, end});
    }
    word_start = std::string_view::npos;
  };
  while (i < text.size()) {
    if (utf8::IsAsciiSpace(text[i])) {
      flush(i);
      ++i;
      continue;
    }
    if (std::size_t plen = PunctuationLength(text, i)) {
      flush(i);
      tokens.push_back(Token{std::string(text.substr(i, plen)), i, i + plen});
      i += plen;
      continue;
    }
    if (word_start == std::string_view::npos) word_start = i;
    i += utf8::SequenceLength(static_cast<unsigned char>(text[i]));
  }
  flush(std::min(i, text.size()));
  return tokens;
}

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kKeep:
      return "KEEP";
    case EditKind::kAdd:
      return "ADD";
    case EditKind::kDelete:
      return "DELETE";
    case EditKind::kReplace:
      return "REPLACE";
  }
  return "KEEP";
}

std::vector<EditOp> EditScript(const std::vector<Token>& a,
                               const std::vector<Token>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t width = m + 1;
  std::vector<std::size_t> dist((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return dist[i * width + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diagonal =
          at(i - 1, j - 1) + (a[i - 1].text == b[j - 1].text ? 0 : 1);
      at(i, j) = std::min({diagonal, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  std::vector<EditOp> script;
  script.reserve(n + m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::size_t here = at(i, j);
    if (i > 0 && j > 0 && a[i - 1].text == b[j - 1].text &&
        here == at(i - 1, j - 1)) {
      script.push_back({EditKind::kKeep, i - 1, i, j - 1, j});
      --i;
      --j;
    } else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
      script.push_back({EditKind::kReplace, i - 1, i, j - 1, j});
      --i;
      --j;
    } else if (i > 0 && here == at(i - 1, j) + 1) {
      script.push_back({EditKind::kDelete, i - 1, i, j, j});
      --i;
    } else {
      script.push_back({EditKind::kAdd, i, i, j - 1, j});
      --j;
    }
  }
  std::reverse(script.begin(), script.end());
  return script;
}

std::size_t ScriptCost(const std::vector<EditOp>& script) {
  return static_cast<std::size_t>(std::count_if(
      script.begin(), script.end(),
      [](const EditOp& op) { return op.kind != EditKind::kKeep; }));
}

std::vector<std::string> ApplyScript(const std::vector<EditOp>& script,
                                     const std::vector<Token>& a,
                                     const std::vector<Token>& b) {
  std::vector<std::string> out;
  for (const EditOp& op : script) {
    switch (op.kind) {
      case EditKind::kKeep:
        for (std::size_t k = op.source_begin; k < op.source_end; ++k) {
          out.push_back(a[k].text);
        }
        break;
      case EditKind::kAdd:
      case EditKind::kReplace:
        for (std::size_t k = op.target_begin; k < op.target_end; ++k) {
          out.push_back(b[k].text);
        }
        break;
      case EditKind::kDelete:
        break;
    }
  }
  return out;
}

std::vector<Change> Aggregate(const std::vector<EditOp>& script,
                              const Fragment& fragment,
                              std::string_view rephrasing,
                              ChangeOrigin origin) {
  const std::vector<Token> source = Tokenize(fragment.text);
  const std::vector<Token> target = Tokenize(rephrasing);
  std::vector<Change> changes;

  std::size_t k = 0;
  while (k < script.size()) {
    if (script[k].kind == EditKind::kKeep) {
      ++k;
      continue;
    }
    Change change;
    change.origin = origin;
    const std::size_t src_begin = script[k].source_begin;
    const std::size_t tgt_begin = script[k].target_begin;
    std::size_t src_end = src_begin;
    std::size_t tgt_end = tgt_begin;
    for (; k < script.size() && script[k].kind != EditKind::kKeep; ++k) {
      const EditOp& op = script[k];
      src_end = std::max(src_end, op.source_end);
      tgt_end = std::max(tgt_end, op.target_end);
      if (op.kind == EditKind::kAdd) ++change.adds;
      if (op.kind == EditKind::kDelete) ++change.deletes;
      if (op.kind == EditKind::kReplace) ++change.replaces;
    }

    if (tgt_end > tgt_begin) {
      const std::size_t from = target[tgt_begin].start;
      change.replacement =
          std::string(rephrasing.substr(from, target[tgt_end - 1].end - from));
    }
    std::size_t local_start;
    std::size_t local_end;
    if (src_end > src_begin) {
      local_start = source[src_begin].start;
      local_end = source[src_end - 1].end;
    } else if (src_begin < source.size()) {
      // Insertion before the next source token.
      local_start = local_end = source[src_begin].start;
      change.replacement += ' ';
    } else if (!source.empty()) {
      local_start = local_end = source.back().end;
      change.replacement.insert(change.replacement.begin(), ' ');
    } else {
      local_start = local_end = 0;
    }
    change.original =
        fragment.text.substr(local_start, local_end - local_start);
    change.span_start = fragment.offset + local_start;
    change.span_end = fragment.offset + local_end;
    changes.push_back(std::move(change));
  }
  return changes;
}

std::vector<Change> FilterChanges(std::vector<Change> changes,
                                  std::size_t fragment_chars,
                                  std::size_t text_chars) {
  std::erase_if(changes, [&](const Change& change) {
    if (change.replaces == 0) return true;
    const std::size_t chars = utf8::Length(change.original);
    return 3 * chars > 2 * fragment_chars || 3 * chars > text_chars;
  });
  return changes;
}

std::vector<Change> ExtractChanges(const Fragment& fragment,
                                   std::string_view rephrasing,
                                   ChangeOrigin origin) {
  const std::vector<EditOp> script =
      EditScript(Tokenize(fragment.text), Tokenize(rephrasing));
  return Aggregate(script, fragment, rephrasing, origin);
}

}  // namespace repattack
