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

#include "medtx/error.h"

namespace medtx {
namespace {

constexpr std::string_view kOneSetText =
    "Here is a text from a medical transcript obtained from an ASR. It "
    "might contain some error, for example, wrong medical term "
    "transcribed. Can you help me correct it by replacing the words "
    "that you think are most likely the wrong ones, with words that you "
    "think are most possibly the right word in this context? You can "
    "also add words or delete words. The words are mostly in the field "
    "of cardiology, so please try to relate to cardiological terms. If "
    "you think it is correct already, leave it without any change. Here "
    "is the text: {...}";

constexpr std::string_view kSentenceText =
    "Here is a sentence from a medical transcript obtained from an ASR. "
    "It might contain some error, for example, wrong medical term "
    "transcribed. Can you help me correct it by replacing the words "
    "that you think are most likely the wrong ones, with words that you "
    "think are most possibly the right word in this context? You can "
    "also add words or delete words. The words are mostly in the field "
    "of cardiology, so please try to relate to cardiological terms. If "
    "you think it is correct already, leave it without any change. Here "
    "is the sentence: {...}";

}  // namespace

std::string PromptTemplate::Fill(std::string_view content) const {
  if (content.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                mode == PromptMode::kOneSet ? "transcript text is empty"
                                            : "sentence is empty");
  }
  std::string out(prefix());
  out.append(content);
  out.append(suffix());
  return out;
}

std::optional<std::string_view> PromptTemplate::Extract(
    std::string_view prompt) const {
  const std::string_view pre = prefix();
  const std::string_view post = suffix();
  if (prompt.size() < pre.size() + post.size() ||
      prompt.substr(0, pre.size()) != pre ||
      prompt.substr(prompt.size() - post.size()) != post) {
    return std::nullopt;
  }
  return prompt.substr(pre.size(), prompt.size() - pre.size() - post.size());
}

const PromptTemplate& OneSetTemplate() {
  static constexpr PromptTemplate kTemplate{PromptMode::kOneSet, kOneSetText};
  return kTemplate;
}

const PromptTemplate& SentenceTemplate() {
  static constexpr PromptTemplate kTemplate{PromptMode::kSentence,
                                            kSentenceText};
  return kTemplate;
}

std::string BuildOneSetPrompt(std::string_view text) {
  return OneSetTemplate().Fill(text);
}

std::string BuildSentencePrompt(std::string_view sentence) {
  return SentenceTemplate().Fill(sentence);
}

}  // namespace medtx
