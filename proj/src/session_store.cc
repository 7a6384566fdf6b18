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


#include "medtx/session_store.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "medtx/error.h"

namespace medtx {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

template <typename T>
T Field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::kCorruptRecord,
                fmt::format("missing field '{}'", key));
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kCorruptRecord,
                fmt::format("field '{}' has the wrong type", key));
  }
}

template <typename T>
std::optional<T> OptionalField(const json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return Field<T>(doc, key);
}

ojson OptionalToJson(const std::optional<std::string>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

Choice ChoiceFromJson(const json& doc) {
  const auto name = Field<std::string>(doc, "choice");
  if (name == "keep_asr") return KeepAsr{};
  if (name == "accept_llm") return AcceptLlm{};
  if (name == "manual") return ManualEdit{Field<std::string>(doc, "text")};
  throw Error(ErrorCode::kCorruptRecord, "unknown choice '" + name + "'");
}

}  // namespace

ojson SuggestionToJson(const Suggestion& s) {
  ojson meta = {{"model", s.provider_meta.model},
                {"latency_ms", s.provider_meta.latency_ms},
                {"attempts", s.provider_meta.attempts},
                {"raw_response", s.provider_meta.raw_response},
                {"parameters", s.provider_meta.parameters}};
  if (s.provider_meta.error) meta["error"] = *s.provider_meta.error;
  return {{"sentence_index", s.sentence_index},
          {"original_text", s.original_text},
          {"corrected_text", s.corrected_text},
          {"rationale", s.rationale},
          {"provider_meta", std::move(meta)}};
}

Suggestion SuggestionFromJson(const json& doc) {
  Suggestion s;
  s.sentence_index = Field<std::size_t>(doc, "sentence_index");
  s.original_text = Field<std::string>(doc, "original_text");
  s.corrected_text = Field<std::string>(doc, "corrected_text");
  s.rationale = Field<std::vector<std::string>>(doc, "rationale");
  const json meta = Field<json>(doc, "provider_meta");
  s.provider_meta.model = Field<std::string>(meta, "model");
  s.provider_meta.latency_ms = Field<std::int64_t>(meta, "latency_ms");
  s.provider_meta.attempts = Field<int>(meta, "attempts");
  s.provider_meta.raw_response = Field<std::string>(meta, "raw_response");
  s.provider_meta.parameters =
      Field<std::map<std::string, std::string>>(meta, "parameters");
  s.provider_meta.error = OptionalField<std::string>(meta, "error");
  return s;
}

ojson SessionToJson(const ReviewSession& session) {
  const SessionRecord& r = session.record();
  ojson sentences = ojson::array();
  for (const Sentence& s : r.sentences) {
    sentences.push_back({{"index", s.index},
                         {"text", s.text},
                         {"begin", s.span.begin},
                         {"end", s.span.end}});
  }
  ojson suggestions = ojson::array();
  for (const Suggestion& s : r.suggestions) {
    suggestions.push_back(SuggestionToJson(s));
  }
  ojson decisions = ojson::object();
  for (const auto& [index, d] : r.decisions) {
    ojson entry = {{"choice", ChoiceName(d.choice)}};
    if (const auto* manual = std::get_if<ManualEdit>(&d.choice)) {
      entry["text"] = manual->text;
    }
    entry["decided_at"] = FormatTimestamp(d.decided_at);
    if (d.note) entry["note"] = *d.note;
    decisions[std::to_string(index)] = std::move(entry);
  }
  return {{"schema_version", kSessionSchemaVersion},
          {"session_id", r.session_id},
          {"recording_id", r.recording_id},
          {"audio_path", OptionalToJson(r.audio_path)},
          {"status", StatusName(r.status)},
          {"created_at", FormatTimestamp(r.created_at)},
          {"updated_at", FormatTimestamp(r.updated_at)},
          {"asr_transcript", r.asr_transcript},
          {"sentences", std::move(sentences)},
          {"suggestions", std::move(suggestions)},
          {"decisions", std::move(decisions)},
          {"final_text", OptionalToJson(r.final_text)}};
}

ReviewSession SessionFromJson(const json& doc) {
  if (!doc.is_object() || !doc.contains("schema_version") ||
      !doc["schema_version"].is_number_integer()) {
    throw Error(ErrorCode::kCorruptRecord,
                "session record has no integer schema_version");
  }
  if (const int v = doc["schema_version"].get<int>();
      v != kSessionSchemaVersion) {
    throw Error(ErrorCode::kSchemaVersion,
                fmt::format("session schema version {} is not supported "
                            "(expected {})",
                            v, kSessionSchemaVersion));
  }
  SessionRecord r;
  r.session_id = Field<std::string>(doc, "session_id");
  r.recording_id = Field<std::string>(doc, "recording_id");
  r.audio_path = OptionalField<std::string>(doc, "audio_path");
  r.asr_transcript = Field<std::string>(doc, "asr_transcript");
  const auto status = Field<std::string>(doc, "status");
  if (status == "finalized") {
    r.status = SessionStatus::kFinalized;
  } else if (status == "in_progress") {
    r.status = SessionStatus::kInProgress;
  } else {
    throw Error(ErrorCode::kCorruptRecord, "unknown status '" + status + "'");
  }
  r.created_at = ParseTimestamp(Field<std::string>(doc, "created_at"));
  r.updated_at = ParseTimestamp(Field<std::string>(doc, "updated_at"));
  r.final_text = OptionalField<std::string>(doc, "final_text");

  for (const json& s : Field<json>(doc, "sentences")) {
    Sentence sentence;
    sentence.index = Field<std::size_t>(s, "index");
    sentence.text = Field<std::string>(s, "text");
    sentence.span = {Field<std::size_t>(s, "begin"), Field<std::size_t>(s, "end")};
    sentence.tokens = Tokenize(sentence.text);
    for (Token& t : sentence.tokens) {
      t.source_span.begin += sentence.span.begin;
      t.source_span.end += sentence.span.begin;
    }
    r.sentences.push_back(std::move(sentence));
  }
  for (const json& s : Field<json>(doc, "suggestions")) {
    r.suggestions.push_back(SuggestionFromJson(s));
  }
  const json decisions = Field<json>(doc, "decisions");
  if (!decisions.is_object()) {
    throw Error(ErrorCode::kCorruptRecord, "decisions must be an object");
  }
  for (const auto& [key, d] : decisions.items()) {
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kCorruptRecord, "bad decision key '" + key + "'");
    }
    r.decisions.emplace(
        index, Decision{ChoiceFromJson(d),
                        ParseTimestamp(Field<std::string>(d, "decided_at")),
                        OptionalField<std::string>(d, "note")});
  }
  return ReviewSession(std::move(r), /*restoring=*/true);
}

std::string SerializeSession(const ReviewSession& session) {
  return SessionToJson(session).dump(2) + "\n";
}

ReviewSession DeserializeSession(std::string_view text) {
  const json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kCorruptRecord, "session record is not valid JSON");
  }
  return SessionFromJson(doc);
}

SessionStore::SessionStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_)) {
    throw Error(ErrorCode::kIo, "cannot use session directory " + dir_.string());
  }
}

std::filesystem::path SessionStore::PathFor(std::string_view session_id) const {
  if (!IsValidSessionId(session_id)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("invalid session id '{}'", session_id));
  }
  return dir_ / (std::string(session_id) + ".json");
}

void SessionStore::Save(const ReviewSession& session) const {
  const std::filesystem::path target = PathFor(session.id());
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << SerializeSession(session);
    if (!out.flush()) {
      throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot write " + target.string());
  }
}

ReviewSession SessionStore::Load(std::string_view session_id) const {
  const std::filesystem::path path = PathFor(session_id);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kNotFound,
                fmt::format("unknown session '{}'", session_id));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return DeserializeSession(buf.str());
}

bool SessionStore::Contains(std::string_view session_id) const {
  return IsValidSessionId(session_id) &&
         std::filesystem::exists(PathFor(session_id));
}

std::vector<std::string> SessionStore::List() const {
  std::vector<std::string> ids;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      ids.push_back(entry.path().stem().string());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace medtx
