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


#include "medtx/prompts.h"

#include <string>

#include <gtest/gtest.h>

#include "medtx/error.h"
#include "test_util.h"

namespace medtx {
namespace {

using ::medtx::testing::ReadData;

// The golden files hold each template with the insertion slot written as
// "{...}".
std::string Golden(const std::string& name, const std::string& content) {
  std::string golden = ReadData("prompts/" + name);
  const auto slot = golden.find("{...}");
  EXPECT_NE(slot, std::string::npos);
  EXPECT_EQ(golden.find("{...}", slot + 1), std::string::npos);
  return golden.replace(slot, 5, content);
}

TEST(PromptGoldenTest, OneSetTemplateIsByteIdentical) {
  EXPECT_EQ(std::string(OneSetTemplate().text), ReadData("prompts/one_set.txt"));
  EXPECT_EQ(BuildOneSetPrompt("abc"), Golden("one_set.txt", "abc"));
}

TEST(PromptGoldenTest, SentenceTemplateIsByteIdentical) {
  EXPECT_EQ(std::string(SentenceTemplate().text),
            ReadData("prompts/sentence.txt"));
  const std::string s = "Pacemaker site, no bleeding or hematoma.";
  EXPECT_EQ(BuildSentencePrompt(s), Golden("sentence.txt", s));
}

TEST(PromptTest, OneSetEndsWithText) {
  const std::string p = BuildOneSetPrompt("abc");
  EXPECT_TRUE(p.ends_with("Here is the text: abc"));
  EXPECT_TRUE(p.starts_with("Here is a text from a medical transcript obtained "
                            "from an ASR"));
}

TEST(PromptTest, NewlinesPreserved) {
  const std::string text = "line one.\n\nline two.\r\n";
  EXPECT_EQ(BuildOneSetPrompt(text), Golden("one_set.txt", text));
}

TEST(PromptTest, SentenceEndsWithSentence) {
  EXPECT_TRUE(BuildSentencePrompt("Edema.").ends_with(
      "Here is the sentence: Edema."));
}

TEST(PromptTest, EmptyRejected) {
  for (auto fn : {+[] { BuildOneSetPrompt(""); },
                  +[] { BuildSentencePrompt(""); }}) {
    try {
      fn();
      ADD_FAILURE() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
}

TEST(PromptTest, ExtractInvertsFill) {
  const std::string s = "Xeralta has been resumed.";
  EXPECT_EQ(SentenceTemplate().Extract(BuildSentencePrompt(s)), s);
  EXPECT_EQ(OneSetTemplate().Extract(BuildSentencePrompt(s)), std::nullopt);
}

}  // namespace
}  // namespace medtx
