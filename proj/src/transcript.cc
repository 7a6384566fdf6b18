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

#include "medtx/transcript.h"

#include <string>

#include "medtx/error.h"

namespace medtx {

std::string_view RoleName(TranscriptRole role) {
  switch (role) {
    case TranscriptRole::kReference: return "reference";
    case TranscriptRole::kHypothesis: return "hypothesis";
    case TranscriptRole::kCorrected: return "corrected";
    case TranscriptRole::kFinal: return "final";
  }
  return "unknown";
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kInitialAsr: return "initial_asr";
    case Method::kOneSet: return "one_set";
    case Method::kSentenceBySentence: return "sentence_by_sentence";
    case Method::kManualLlm: return "manual_llm";
  }
  return "unknown";
}

std::string_view MethodTitle(Method method) {
  switch (method) {
    case Method::kInitialAsr: return "Initial ASR";
    case Method::kOneSet: return "One Set";
    case Method::kSentenceBySentence: return "Sentence by Sentence";
    case Method::kManualLlm: return "Manual+LLM";
  }
  return "Unknown";
}

Method ParseMethod(std::string_view name) {
  for (Method m : kReportMethodOrder) {
    if (MethodName(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown method '" + std::string(name) + "'");
}

}  // namespace medtx
