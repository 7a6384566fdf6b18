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


#include "medtx/pipeline.h"

#include "medtx/error.h"

namespace medtx {

ReviewSession StartReview(std::string session_id, std::string recording_id,
                          std::string asr_transcript,
                          const CompletionProvider* provider, int parallelism,
                          std::optional<std::string> audio_path,
                          Timestamp now) {
  std::vector<Sentence> sentences = SegmentSentences(asr_transcript);
  if (sentences.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ASR transcript is empty");
  }
  std::vector<Suggestion> suggestions;
  if (provider != nullptr) {
    suggestions = CorrectSentences(sentences, *provider, parallelism);
  } else {
    for (const Sentence& s : sentences) {
      suggestions.push_back(IdentitySuggestion(s));
    }
  }
  return ReviewSession::Create(std::move(session_id), std::move(recording_id),
                               std::move(asr_transcript), std::move(sentences),
                               std::move(suggestions), std::move(audio_path),
                               now);
}

std::vector<MetricsRow> SessionMetrics(const ReviewSession& session,
                                       std::string_view reference,
                                       const TermList* terms) {
  const SessionRecord& r = session.record();
  std::vector<MetricsRow> rows;
  rows.push_back(Score(r.recording_id, Method::kInitialAsr, reference,
                       r.asr_transcript, terms));
  rows.push_back(Score(r.recording_id, Method::kSentenceBySentence, reference,
                       AcceptAll(r.suggestions).text, terms));
  if (r.final_text) {
    rows.push_back(Score(r.recording_id, Method::kManualLlm, reference,
                         *r.final_text, terms));
  }
  return rows;
}

}  // namespace medtx
