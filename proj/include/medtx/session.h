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


#ifndef MEDTX_SESSION_H_
#define MEDTX_SESSION_H_

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "medtx/correction.h"
#include "medtx/error.h"
#include "medtx/text.h"
#include "medtx/transcript.h"

namespace medtx {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

Timestamp Now();
// RFC 3339 UTC with milliseconds, e.g. "2026-10-19T08:30:00.125Z".
std::string FormatTimestamp(Timestamp t);
Timestamp ParseTimestamp(std::string_view text);  // throws kCorruptRecord

struct KeepAsr {
  friend bool operator==(const KeepAsr&, const KeepAsr&) = default;
};
struct AcceptLlm {
  friend bool operator==(const AcceptLlm&, const AcceptLlm&) = default;
};
struct ManualEdit {
  std::string text;
  friend bool operator==(const ManualEdit&, const ManualEdit&) = default;
};
using Choice = std::variant<KeepAsr, AcceptLlm, ManualEdit>;

std::string_view ChoiceName(const Choice& choice);  // keep_asr|accept_llm|manual

struct Decision {
  Choice choice;
  Timestamp decided_at;
  std::optional<std::string> note;

  friend bool operator==(const Decision&, const Decision&) = default;
};

enum class SessionStatus { kInProgress, kFinalized };

std::string_view StatusName(SessionStatus status);

// Everything a session persists. ReviewSession guards the invariants.
struct SessionRecord {
  std::string session_id;
  std::string recording_id;
  std::optional<std::string> audio_path;
  std::string asr_transcript;
  std::vector<Sentence> sentences;
  std::vector<Suggestion> suggestions;  // suggestions[k] belongs to sentence k
  std::map<std::size_t, Decision> decisions;
  SessionStatus status = SessionStatus::kInProgress;
  std::optional<std::string> final_text;
  Timestamp created_at;
  Timestamp updated_at;

  friend bool operator==(const SessionRecord&, const SessionRecord&) = default;
};

class UndecidedError : public Error {
 public:
  explicit UndecidedError(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

// Random 32-hex-digit identifier.
std::string NewSessionId();
bool IsValidSessionId(std::string_view id);

class ReviewSession {
 public:
  // Validates every invariant; throws kInvalidArgument (or kCorruptRecord
  // when `restoring` is set) on violation.
  explicit ReviewSession(SessionRecord record, bool restoring = false);

  // New in-progress session. Suggestion k must carry sentence index k.
  static ReviewSession Create(std::string session_id, std::string recording_id,
                              std::string asr_transcript,
                              std::vector<Sentence> sentences,
                              std::vector<Suggestion> suggestions,
                              std::optional<std::string> audio_path = {},
                              Timestamp now = Now());

  // Last write wins. Throws kSessionFinalized, or kInvalidArgument for a bad
  // index or an empty manual edit.
  void RecordDecision(std::size_t index, Choice choice,
                      std::optional<std::string> note = {},
                      Timestamp now = Now());

  // Joins resolved sentence texts with single spaces and marks the session
  // finalized. On an already finalized session returns the stored text.
  // Throws UndecidedError listing every undecided index.
  Transcript Finalize(Timestamp now = Now());

  // KeepAsr -> sentence text, AcceptLlm -> suggestion, Manual -> edit text.
  // Undecided sentences resolve to their ASR text.
  std::string ResolvedText(std::size_t index) const;
  std::vector<std::size_t> Undecided() const;

  const SessionRecord& record() const { return record_; }
  const std::string& id() const { return record_.session_id; }
  SessionStatus status() const { return record_.status; }
  std::size_t size() const { return record_.sentences.size(); }
  std::size_t decided() const { return record_.decisions.size(); }
  std::optional<Decision> decision(std::size_t index) const;

  friend bool operator==(const ReviewSession&, const ReviewSession&) = default;

 private:
  void Touch(Timestamp now);

  SessionRecord record_;
};

}  // namespace medtx

#endif  // MEDTX_SESSION_H_
