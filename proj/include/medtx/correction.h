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


#ifndef MEDTX_CORRECTION_H_
#define MEDTX_CORRECTION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "medtx/provider.h"
#include "medtx/text.h"
#include "medtx/transcript.h"

namespace medtx {

struct Suggestion {
  std::size_t sentence_index = 0;
  std::string original_text;
  std::string corrected_text;  // never empty
  std::vector<std::string> rationale;
  ProviderMeta provider_meta;

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

// Reads a per-sentence LLM response. The corrected sentence is the first
// double-quoted span before any "Explanation" marker, else the first
// non-empty line before the marker, else the whole trimmed response. The
// rationale is the numbered list after the marker.
Suggestion ParseSuggestion(std::string_view raw, std::string_view original,
                           std::size_t sentence_index = 0);

// Reads a whole-document response: drops any explanation section and one
// pair of wrapping quotes. Falls back to `original` when nothing remains.
std::string ParseDocumentResponse(std::string_view raw,
                                  std::string_view original);

Suggestion IdentitySuggestion(const Sentence& sentence, std::string error = {});

// One prompt for the whole transcript. Provider errors propagate; nothing
// partial is returned. Leading and trailing whitespace of the input is kept.
Transcript CorrectOneSet(const Transcript& transcript,
                         const CompletionProvider& provider);
Transcript CorrectOneSet(const Transcript& transcript,
                         const ProviderConfig& config);

// One prompt per sentence with at most `parallelism` requests in flight.
// Output order matches input order. A sentence whose request fails yields
// an identity suggestion with provider_meta.error set. Throws kConfig for
// parallelism < 1 and kInvalidArgument for an empty sentence list.
std::vector<Suggestion> CorrectSentences(const std::vector<Sentence>& sentences,
                                         const CompletionProvider& provider,
                                         int parallelism);
std::vector<Suggestion> CorrectSentences(const std::vector<Sentence>& sentences,
                                         const ProviderConfig& config);

// Joins accepted suggestions with single spaces: the sentence-by-sentence
// transcript.
Transcript AcceptAll(const std::vector<Suggestion>& suggestions);

}  // namespace medtx

#endif  // MEDTX_CORRECTION_H_
