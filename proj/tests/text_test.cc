// Copyright 2026 The Medtx Authors.
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


#include "medtx/text.h"

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"

namespace medtx {
namespace {

using ::medtx::testing::ReadData;

std::vector<std::string> Surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

bool IsPunctuationOnly(const std::string& s) {
  for (unsigned char c : s) {
    if (std::isalnum(c) || c >= 0x80) return false;
  }
  return true;
}

TEST(NormalizeTokenTest, StripsTrailingComma) {
  EXPECT_EQ(NormalizeToken("Xarelto,"), "xarelto");
}

TEST(NormalizeTokenTest, KeepsAbbreviationPeriods) {
  EXPECT_EQ(NormalizeToken("p.o."), "p.o.");
  EXPECT_EQ(NormalizeToken("P.O.,"), "p.o.");
  EXPECT_EQ(NormalizeToken("(b.i.d.)"), "b.i.d.");
}

TEST(NormalizeTokenTest, KeepsInteriorCharacters) {
  EXPECT_EQ(NormalizeToken("120/80."), "120/80");
  EXPECT_EQ(NormalizeToken("40%,"), "40%");
  EXPECT_EQ(NormalizeToken("80-year-old"), "80-year-old");
  EXPECT_EQ(NormalizeToken("98.2"), "98.2");
}

TEST(NormalizeTokenTest, PunctuationOnlyIsEmpty) {
  EXPECT_EQ(NormalizeToken("..."), "");
  EXPECT_EQ(NormalizeToken("--"), "");
  EXPECT_EQ(NormalizeToken(","), "");
}

TEST(NormalizeTokenTest, NotAnAbbreviation) {
  EXPECT_EQ(NormalizeToken("daily."), "daily");
  EXPECT_EQ(NormalizeToken("U.S"), "u.s");
  EXPECT_FALSE(IsAbbreviation("a."));
  EXPECT_TRUE(IsAbbreviation("p.o."));
  EXPECT_TRUE(IsAbbreviation("e.g."));
}

TEST(TokenizeTest, VitalsSentence) {
  EXPECT_EQ(Surfaces(Tokenize("Pulse 60 bpm, blood pressure 120/80.")),
            (std::vector<std::string>{"pulse", "60", "bpm", "blood",
                                      "pressure", "120/80"}));
}

TEST(TokenizeTest, EmptyText) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("  \n\t ").empty());
  EXPECT_TRUE(Tokenize(" - , ... ").empty());
}

TEST(TokenizeTest, SpansPointIntoSource) {
  const std::string text = "  Skin normal.\nPulse 60 bpm, ok";
  const std::vector<Token> tokens = Tokenize(text);
  ASSERT_EQ(tokens.size(), 6u);
  std::size_t last_end = 0;
  for (const Token& t : tokens) {
    EXPECT_LT(t.source_span.begin, t.source_span.end);
    EXPECT_GE(t.source_span.begin, last_end);
    last_end = t.source_span.end;
    EXPECT_EQ(NormalizeToken(text.substr(t.source_span.begin,
                                         t.source_span.size())),
              t.surface);
  }
}

TEST(TokenizeTest, ReferenceFixtureTokenCount) {
  // Frozen from the bundled fixture.
  EXPECT_EQ(Tokenize(ReadData("recording1_reference.txt")).size(), 264u);
}

TEST(SegmentSentencesTest, TwoSentences) {
  const auto s =
      SegmentSentences("Skin normal. Pacemaker site, no bleeding or hematoma.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "Skin normal.");
  EXPECT_EQ(s[1].text, "Pacemaker site, no bleeding or hematoma.");
  EXPECT_EQ(s[1].index, 1u);
}

TEST(SegmentSentencesTest, NoSplitInsideAbbreviation) {
  const auto s =
      SegmentSentences("patient is back on amiodarone 200 mg p.o. daily.");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].tokens.size(), 9u);
}

TEST(SegmentSentencesTest, QuestionExclamationAndNewline) {
  const auto s = SegmentSentences("Any pain? No! Stable\nDischarge home");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[2].text, "Stable");
  EXPECT_EQ(s[3].text, "Discharge home");
}

TEST(SegmentSentencesTest, DictatedPeriodStaysInText) {
  const auto s = SegmentSentences("Lungs clear Period, heart regular.");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].tokens[2].surface, "period");
}

TEST(SegmentSentencesTest, NoTerminatorYieldsOneSentence) {
  const auto s = SegmentSentences("no terminator here");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].text, "no terminator here");
}

TEST(SegmentSentencesTest, EmptyAndBlankInputs) {
  EXPECT_TRUE(SegmentSentences("").empty());
  EXPECT_TRUE(SegmentSentences(" \n ").empty());
  EXPECT_EQ(Reconstruct(" \n ", SegmentSentences(" \n ")), " \n ");
}

TEST(SegmentSentencesTest, AsrFixtureRoundTrip) {
  const std::string asr = ReadData("recording1_asr.txt");
  const auto sentences = SegmentSentences(asr);
  EXPECT_GT(sentences.size(), 10u);
  EXPECT_EQ(Reconstruct(asr, sentences), asr);
  for (std::size_t k = 0; k < sentences.size(); ++k) {
    EXPECT_EQ(sentences[k].index, k);
    EXPECT_EQ(asr.substr(sentences[k].span.begin, sentences[k].span.size()),
              sentences[k].text);
  }
}

TEST(SegmentSentencesTest, SentenceTokensConcatenateToDocumentTokens) {
  const std::string asr = ReadData("recording1_asr.txt");
  std::vector<Token> joined;
  for (const Sentence& s : SegmentSentences(asr)) {
    joined.insert(joined.end(), s.tokens.begin(), s.tokens.end());
  }
  EXPECT_EQ(joined, Tokenize(asr));
}

// Random texts over an alphabet rich in separators, punctuation and
// abbreviation fragments.
std::string RandomText(std::mt19937& rng) {
  static const std::vector<std::string> kPieces = {
      "a", "B", "p", ".", ".", ",", "?", "!", " ", " ", "\n", "\t", "-", "/",
      "%", "9", "o", "Period", "(", ")", "\"", "e.g.", "p.o.", "120/80", "x"};
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<std::size_t> pick(0, kPieces.size() - 1);
  std::string out;
  for (int n = len(rng); n > 0; --n) out += kPieces[pick(rng)];
  return out;
}

TEST(TextPropertyTest, ReconstructionTokensAndIdempotence) {
  std::mt19937 rng(20260101);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::string text = RandomText(rng);
    const auto sentences = SegmentSentences(text);
    ASSERT_EQ(Reconstruct(text, sentences), text) << "input: " << text;
    for (std::size_t k = 0; k < sentences.size(); ++k) {
      ASSERT_EQ(sentences[k].index, k);
      ASSERT_FALSE(sentences[k].text.empty());
      if (k > 0) {
        ASSERT_GE(sentences[k].span.begin, sentences[k - 1].span.end);
      }
    }
    for (const Token& t : Tokenize(text)) {
      ASSERT_FALSE(t.surface.empty());
      ASSERT_EQ(t.surface.find_first_of(" \t\n\r\v\f"), std::string::npos);
      ASSERT_FALSE(IsPunctuationOnly(t.surface)) << t.surface;
      ASSERT_EQ(NormalizeToken(t.surface), t.surface);
    }
    ASSERT_EQ(SegmentSentences(text), sentences);  // deterministic
  }
}

TEST(TextPropertyTest, NormalizeIsIdempotentOnRawPieces) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 3000; ++iter) {
    std::string raw = RandomText(rng);
    std::erase_if(raw, [](char c) { return std::isspace(
                                        static_cast<unsigned char>(c)); });
    if (raw.empty()) continue;
    const std::string once = NormalizeToken(raw);
    if (!once.empty()) ASSERT_EQ(NormalizeToken(once), once) << raw;
  }
}

}  // namespace
}  // namespace medtx
