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


#ifndef MEDTX_TRANSCRIPT_H_
#define MEDTX_TRANSCRIPT_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medtx/text.h"

namespace medtx {

enum class TranscriptRole { kReference, kHypothesis, kCorrected, kFinal };

// How a transcript was produced; also the column order of reports.
enum class Method { kInitialAsr, kOneSet, kSentenceBySentence, kManualLlm };

inline constexpr std::array<Method, 4> kReportMethodOrder = {
    Method::kInitialAsr, Method::kOneSet, Method::kSentenceBySentence,
    Method::kManualLlm};

std::string_view RoleName(TranscriptRole role);
std::string_view MethodName(Method method);   // "initial_asr", ...
std::string_view MethodTitle(Method method);  // "Initial ASR", ...
Method ParseMethod(std::string_view name);    // throws kInvalidArgument

struct Transcript {
  TranscriptRole role = TranscriptRole::kHypothesis;
  std::optional<Method> method;
  std::string text;

  std::vector<Token> tokens() const { return Tokenize(text); }
  std::vector<Sentence> sentences() const { return SegmentSentences(text); }

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

}  // namespace medtx

#endif  // MEDTX_TRANSCRIPT_H_
