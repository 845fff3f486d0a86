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

#include <random>
#include <string>
#include <vector>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "repattack/error.h"
#include "repattack/utf8.h"

namespace repattack {
namespace {

using ::repattack::testing::RandomDocument;

std::vector<std::string> Texts(std::string_view text,
                               const std::vector<Span>& spans) {
  std::vector<std::string> out;
  for (const Span& s : spans) {
    out.emplace_back(text.substr(s.begin, s.size()));
  }
  return out;
}

TEST(SplitInputTest, SplitsOnNewlinesWithExactOffsets) {
  const auto fragments = SplitInput("A.\nB.", TaskProfile{});
  ASSERT_EQ(fragments.size(), 2u);
  EXPECT_EQ(fragments[0], (Fragment{"A.", 0, 2}));
  EXPECT_EQ(fragments[1], (Fragment{"B.", 3, 2}));
}

TEST(SplitInputTest, KeepsShortSentenceWhole) {
  const std::string text =
      "The recent rise of food prices is resulting in widespread discontent.";
  const auto fragments = SplitInput(text, TaskProfile{});
  ASSERT_EQ(fragments.size(), 1u);
  EXPECT_EQ(fragments[0].text, text);
  EXPECT_EQ(fragments[0].offset, 0u);
}

TEST(SplitInputTest, SplitsSentencesAndDropsWhitespacePieces) {
  const std::string text = "  Hi. Go now.\n\n  \nDone!";
  const auto fragments = SplitInput(text, TaskProfile{});
  ASSERT_EQ(fragments.size(), 3u);
  EXPECT_EQ(fragments[0].text, "Hi.");
  EXPECT_EQ(fragments[1].text, "Go now.");
  EXPECT_EQ(fragments[2].text, "Done!");
  for (const Fragment& f : fragments) {
    EXPECT_EQ(text.substr(f.offset, f.length), f.text);
  }
}

TEST(SplitInputTest, FactCheckingSplitsOnRecordSeparator) {
  TaskProfile profile = TaskProfile::For(TaskId::kFC);
  const std::string text = "Claim here.\tEvidence one. Evidence two.";
  const auto fragments = SplitInput(text, profile);
  ASSERT_EQ(fragments.size(), 3u);
  EXPECT_EQ(fragments[0].text, "Claim here.");
  EXPECT_EQ(fragments[1].offset, 12u);
  EXPECT_EQ(fragments[2].text, "Evidence two.");

  profile.record_separator = " ~ ";
  const auto custom = SplitInput("a claim ~ the evidence", profile);
  ASSERT_EQ(custom.size(), 2u);
  EXPECT_EQ(custom[1].text, "the evidence");
  EXPECT_EQ(custom[1].offset, 10u);
}

TEST(SplitInputTest, SeparatorIgnoredOutsideFactChecking) {
  const auto fragments = SplitInput("a claim\tthe evidence", TaskProfile{});
  ASSERT_EQ(fragments.size(), 1u);
}

TEST(SplitInputTest, RejectsMalformedUtf8) {
  EXPECT_THROW(SplitInput("bad \xff byte", TaskProfile{}), EncodingError);
}

TEST(SplitInputTest, RejectsInvalidProfile) {
  TaskProfile profile;
  profile.min_phrase_len = 0;
  EXPECT_THROW(SplitInput("x", profile), PreconditionError);
  TaskProfile fc = TaskProfile::For(TaskId::kFC);
  fc.record_separator.clear();
  EXPECT_THROW(SplitInput("x", fc), PreconditionError);
}

TEST(SplitInputTest, OffsetRoundTripOnRandomDocuments) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string doc = RandomDocument(rng);
    const auto fragments = SplitInput(doc, TaskProfile{});
    ASSERT_FALSE(fragments.empty());
    std::size_t previous_end = 0;
    for (const Fragment& f : fragments) {
      ASSERT_EQ(doc.substr(f.offset, f.length), f.text) << doc;
      ASSERT_EQ(f.length, f.text.size());
      ASSERT_GE(f.offset, previous_end);
      ASSERT_FALSE(utf8::Trim(f.text).empty());
      ASSERT_TRUE(utf8::IsValid(f.text));
      previous_end = f.end();
    }
    // Everything between fragments is whitespace.
    std::size_t cursor = 0;
    for (const Fragment& f : fragments) {
      ASSERT_TRUE(utf8::Trim(doc.substr(cursor, f.offset - cursor)).empty());
      cursor = f.end();
    }
    ASSERT_TRUE(utf8::Trim(doc.substr(cursor)).empty());
  }
}

TEST(SplitInputTest, NewlineBetweenFragmentsNeverDecreasesFragmentCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string doc = RandomDocument(rng);
    const auto fragments = SplitInput(doc, TaskProfile{});
    std::vector<std::size_t> gaps = {0, doc.size()};
    for (const Fragment& f : fragments) {
      gaps.push_back(f.offset);
      gaps.push_back(f.end());
    }
    std::uniform_int_distribution<std::size_t> pick(0, gaps.size() - 1);
    std::string edited = doc;
    edited.insert(gaps[pick(rng)], "\n");
    EXPECT_GE(SplitInput(edited, TaskProfile{}).size(), fragments.size())
        << edited;
  }
}

TEST(SplitInputTest, NewlineInsideShortSentenceAddsFragment) {
  const std::string text = "Prices rose sharply. Officials warned.";
  const std::size_t before = SplitInput(text, TaskProfile{}).size();
  std::string edited = text;
  edited.insert(6, "\n");
  EXPECT_EQ(SplitInput(edited, TaskProfile{}).size(), before + 1);
}

TEST(SplitSentencesTest, SplitsPlainSentences) {
  const std::string text = "Hi. Go now.";
  EXPECT_EQ(Texts(text, SplitSentences(text)),
            (std::vector<std::string>{"Hi.", "Go now."}));
}

TEST(SplitSentencesTest, GuardsAbbreviations) {
  EXPECT_EQ(SplitSentences("Dr. Smith left.").size(), 1u);
  for (std::string_view abbreviation : SentenceAbbreviations()) {
    const std::string text = "See " + std::string(abbreviation) + " Next.";
    EXPECT_EQ(SplitSentences(text).size(), 1u) << text;
  }
}

TEST(SplitSentencesTest, RequiresUppercaseOrDigitAfterBoundary) {
  EXPECT_EQ(SplitSentences("It ended. then more.").size(), 1u);
  EXPECT_EQ(SplitSentences("Wait! 2 more? Yes.").size(), 3u);
  EXPECT_EQ(SplitSentences("Version 2.5 is out.").size(), 1u);
}

TEST(SplitSentencesTest, EmptyAndWhitespaceInput) {
  EXPECT_TRUE(SplitSentences("").empty());
  EXPECT_TRUE(SplitSentences("   ").empty());
  EXPECT_EQ(SplitSentences("no terminal punctuation").size(), 1u);
}

TEST(SplitPhrasesTest, SplitsWhenBothSidesAreLongEnough) {
  const std::string text = std::string(64, 'a') + ", " + std::string(64, 'b');
  ASSERT_EQ(text.size(), 130u);
  ASSERT_EQ(text[64], ',');
  const auto spans = SplitPhrases(text, 60);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(text.substr(spans[0].begin, spans[0].size()),
            std::string(64, 'a') + ",");
  EXPECT_EQ(text.substr(spans[1].begin, spans[1].size()), std::string(64, 'b'));
}

TEST(SplitPhrasesTest, ShortPiecesStayUnsplit) {
  EXPECT_EQ(SplitPhrases("a, b", 60).size(), 1u);
  const std::string lopsided =
      std::string(100, 'a') + ", " + std::string(30, 'b');
  EXPECT_EQ(SplitPhrases(lopsided, 60).size(), 1u);
}

TEST(SplitPhrasesTest, NoBoundaryCharacters) {
  EXPECT_EQ(SplitPhrases(std::string(200, 'x'), 60).size(), 1u);
}

TEST(SplitPhrasesTest, RecognisesEveryBoundaryClass) {
  const std::string left(70, 'a');
  const std::string right(70, 'b');
  for (const std::string sep :
       {": ", " \xe2\x80\x93 ", " \xe2\x80\x94 ", " - ", " \"", " \xe2\x80\x9c",
        "\xe2\x80\x9d ", " \xe2\x80\x98", "' "}) {
    const std::string text = left + sep + right;
    EXPECT_EQ(SplitPhrases(text, 60).size(), 2u) << sep;
  }
}

TEST(SplitPhrasesTest, WordInternalHyphensAndApostrophesDoNotSplit) {
  const std::string text = std::string(70, 'a') + "-" + std::string(70, 'b');
  EXPECT_EQ(SplitPhrases(text, 60).size(), 1u);
  const std::string contraction =
      std::string(70, 'a') + "'t " + std::string(70, 'b');
  EXPECT_EQ(SplitPhrases(contraction, 60).size(), 1u);
}

TEST(SplitPhrasesTest, ThresholdCountsCharactersNotBytes) {
  // 58 two-byte characters plus the comma are 117 bytes but 59 characters.
  std::string left;
  for (int i = 0; i < 58; ++i) left += "\xc3\xa9";
  const std::string text = left + ", " + std::string(80, 'b');
  EXPECT_EQ(SplitPhrases(text, 60).size(), 1u);
}

TEST(SplitPhrasesTest, NoPieceShorterThanMinimumOnRandomInput) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(1, 40);
  std::uniform_int_distribution<int> min_len(1, 80);
  const std::vector<std::string> seps = {", ", ": ", " - ", " \"", "\" "};
  std::uniform_int_distribution<std::size_t> pick(0, seps.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const int parts = len(rng) % 8 + 1;
    for (int p = 0; p < parts; ++p) {
      text += std::string(len(rng), 'w');
      if (p + 1 < parts) text += seps[pick(rng)];
    }
    const int m = min_len(rng);
    const auto spans = SplitPhrases(text, m);
    ASSERT_FALSE(spans.empty());
    if (spans.size() == 1) continue;
    for (const Span& s : spans) {
      EXPECT_GE(utf8::Length(text.substr(s.begin, s.size())),
                static_cast<std::size_t>(m))
          << text;
    }
  }
}

TEST(SplitPhrasesTest, RejectsNonPositiveMinimum) {
  EXPECT_THROW(SplitPhrases("x", 0), PreconditionError);
}

TEST(TaskProfileTest, ParsesTaskNames) {
  EXPECT_EQ(ParseTaskId("fc"), TaskId::kFC);
  EXPECT_EQ(ParseTaskId("GENERIC"), TaskId::kGeneric);
  EXPECT_EQ(TaskIdName(TaskId::kHN), "HN");
  EXPECT_THROW(ParseTaskId("XX"), PreconditionError);
}

}  // namespace
}  // namespace repattack
