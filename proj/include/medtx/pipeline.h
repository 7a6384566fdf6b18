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


#ifndef MEDTX_PIPELINE_H_
#define MEDTX_PIPELINE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medtx/correction.h"
#include "medtx/report.h"
#include "medtx/session.h"
#include "medtx/terms.h"

namespace medtx {

// Segments the ASR transcript and asks `provider` for one suggestion per
// sentence. With no provider every suggestion is the ASR sentence itself.
// Throws kInvalidArgument when the transcript has no sentences.
ReviewSession StartReview(std::string session_id, std::string recording_id,
                          std::string asr_transcript,
                          const CompletionProvider* provider, int parallelism,
                          std::optional<std::string> audio_path = {},
                          Timestamp now = Now());

// Rows for every method the session can produce: initial_asr always,
// sentence_by_sentence (every suggestion accepted) always, and manual_llm
// once finalized.
std::vector<MetricsRow> SessionMetrics(const ReviewSession& session,
                                       std::string_view reference,
                                       const TermList* terms = nullptr);

}  // namespace medtx

#endif  // MEDTX_PIPELINE_H_
