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

#include <fstream>

#include "repattack/error.h"
#include "repattack/hashing.h"
#include "repattack/rephraser.h"
#include "repattack/utf8.h"

namespace repattack {
namespace {

bool IsWordChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || (static_cast<unsigned char>(c) >= 0x80);
}

// Replaces every whole-word, ASCII-case-insensitive occurrence of `from`.
// Returns the number of replacements made.
int ReplaceWholeWord(std::string& text, std::string_view from,
                     std::string_view to) {
  if (from.empty()) return 0;
  const std::string needle = utf8::AsciiLower(from);
  std::string lowered = utf8::AsciiLower(text);
  int count = 0;
  std::size_t pos = 0;
  while ((pos = lowered.find(needle, pos)) != std::string::npos) {
    const std::size_t end = pos + needle.size();
    const bool left_ok = pos == 0 || !IsWordChar(text[pos - 1]);
    const bool right_ok = end == text.size() || !IsWordChar(text[end]);
    if (!left_ok || !right_ok) {
      ++pos;
      continue;
    }
    std::string replacement(to);
    if (!replacement.empty() && text[pos] >= 'A' && text[pos] <= 'Z' &&
        replacement[0] >= 'a' && replacement[0] <= 'z') {
      replacement[0] = static_cast<char>(replacement[0] - 'a' + 'A');
    }
    text.replace(pos, needle.size(), replacement);
    lowered = utf8::AsciiLower(text);
    pos += replacement.size();
    ++count;
  }
  return count;
}

}  // namespace

StubBackend::StubBackend(SynonymTable table) : table_(std::move(table)) {}

std::string StubBackend::Complete(std::string_view prompt) {
  const std::string fragment(ExtractPromptFragment(prompt));
  std::vector<std::string> lines;
  std::string combined = fragment;
  int matched = 0;
  for (const auto& [from, to] : table_) {
    std::string single = fragment;
    if (ReplaceWholeWord(single, from, to) == 0) continue;
    lines.push_back(std::move(single));
    ReplaceWholeWord(combined, from, to);
    ++matched;
  }
  if (matched >= 2) lines.push_back(std::move(combined));
  if (lines.empty()) return fragment;
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out += std::to_string(i + 1) + ". " + lines[i] + "\n";
  }
  return out;
}

std::string StubBackend::Identity() const {
  std::string serialized;
  for (const auto& [from, to] : table_) serialized += from + "\t" + to + "\n";
  return "stub:" + HexDigest(serialized);
}

StubBackend StubBackend::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open synonym table: " + path);
  SynonymTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::Trim(line).empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error("synonym table line lacks a tab: " + line);
    }
    table.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return StubBackend(std::move(table));
}

StubBackend StubBackend::FromInline(std::string_view spec) {
  SynonymTable table;
  std::size_t begin = 0;
  while (begin <= spec.size()) {
    std::size_t comma = spec.find(',', begin);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view item = utf8::Trim(spec.substr(begin, comma - begin));
    begin = comma + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw PreconditionError("synonym entry must look like from=to: " +
                              std::string(item));
    }
    table.emplace_back(std::string(item.substr(0, eq)),
                       std::string(item.substr(eq + 1)));
  }
  return StubBackend(std::move(table));
}

}  // namespace repattack
