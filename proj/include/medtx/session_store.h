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


#ifndef MEDTX_SESSION_STORE_H_
#define MEDTX_SESSION_STORE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "medtx/session.h"

namespace medtx {

inline constexpr int kSessionSchemaVersion = 1;

// Session document layout (all fields required unless noted):
//
//   schema_version  int, must equal kSessionSchemaVersion
//   session_id, recording_id, asr_transcript  string
//   audio_path      string or null
//   status          "in_progress" | "finalized"
//   final_text      string or null
//   created_at, updated_at   RFC 3339 UTC, millisecond precision
//   sentences[]     {index, text, begin, end}
//   suggestions[]   {sentence_index, original_text, corrected_text,
//                    rationale[], provider_meta{model, latency_ms, attempts,
//                    raw_response, parameters{}, error (optional)}}
//   decisions{}     "<index>" -> {choice, text (manual only), decided_at,
//                    note (optional)}
nlohmann::ordered_json SessionToJson(const ReviewSession& session);
ReviewSession SessionFromJson(const nlohmann::json& doc);  // kSchemaVersion,
                                                           // kCorruptRecord
nlohmann::ordered_json SuggestionToJson(const Suggestion& s);
Suggestion SuggestionFromJson(const nlohmann::json& doc);

// Pretty-printed document with a trailing newline.
std::string SerializeSession(const ReviewSession& session);
ReviewSession DeserializeSession(std::string_view text);

// One `<session_id>.json` file per session under a directory. Writes go to
// a temporary file first and are renamed into place.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path dir);

  void Save(const ReviewSession& session) const;
  ReviewSession Load(std::string_view session_id) const;  // kNotFound, ...
  bool Contains(std::string_view session_id) const;
  std::vector<std::string> List() const;  // sorted ids
  std::filesystem::path PathFor(std::string_view session_id) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace medtx

#endif  // MEDTX_SESSION_STORE_H_
