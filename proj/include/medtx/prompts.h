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


#ifndef MEDTX_PROMPTS_H_
#define MEDTX_PROMPTS_H_

#include <optional>
#include <string>
#include <string_view>

namespace medtx {

enum class PromptMode { kOneSet, kSentence };

// A correction prompt with exactly one insertion slot, written as "{...}".
struct PromptTemplate {
  static constexpr std::string_view kSlot = "{...}";

  PromptMode mode;
  std::string_view text;

  std::string_view prefix() const { return text.substr(0, text.find(kSlot)); }
  std::string_view suffix() const {
    return text.substr(text.find(kSlot) + kSlot.size());
  }
  // Throws kInvalidArgument when `content` is empty.
  std::string Fill(std::string_view content) const;
  // Returns the slot content when `prompt` was produced by Fill.
  std::optional<std::string_view> Extract(std::string_view prompt) const;
};

const PromptTemplate& OneSetTemplate();
const PromptTemplate& SentenceTemplate();

std::string BuildOneSetPrompt(std::string_view text);
std::string BuildSentencePrompt(std::string_view sentence);

}  // namespace medtx

#endif  // MEDTX_PROMPTS_H_
