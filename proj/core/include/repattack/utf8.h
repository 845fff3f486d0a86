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

#ifndef REPATTACK_UTF8_H_
#define REPATTACK_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace repattack::utf8 {

bool IsValid(std::string_view text);

// Throws EncodingError when `text` is not well-formed UTF-8.
void Validate(std::string_view text);

// Number of code points. Assumes valid input; stray continuation bytes are
// not counted.
std::size_t Length(std::string_view text);

// Byte length of the code point whose lead byte is `lead` (1 for invalid
// leads so callers always make progress).
std::size_t SequenceLength(unsigned char lead);

std::u32string Decode(std::string_view text);

inline bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Trims ASCII whitespace; returns the [begin, end) byte range of the
// remaining content relative to `text`.
std::pair<std::size_t, std::size_t> TrimRange(std::string_view text);

std::string_view Trim(std::string_view text);

std::string AsciiLower(std::string_view text);

}  // namespace repattack::utf8

#endif  // REPATTACK_UTF8_H_
