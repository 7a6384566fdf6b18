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


#include "medtx/session.h"

#include <algorithm>
#include <cstdio>
#include <random>

#include <fmt/format.h>

namespace medtx {
namespace {

std::string JoinIndices(const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i : indices) {
    if (!out.empty()) out += ", ";
    out += std::to_string(i);
  }
  return out;
}

}  // namespace

Timestamp Now() {
  return std::chrono::floor<std::chrono::milliseconds>(
      std::chrono::system_clock::now());
}

std::string FormatTimestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss<milliseconds> hms{t - day};
  return fmt::format("{:04}-{:02}-{:02}T{:02}:{:02}:{:02}.{:03}Z",
                     static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()),
                     static_cast<unsigned>(ymd.day()), hms.hours().count(),
                     hms.minutes().count(), hms.seconds().count(),
                     hms.subseconds().count());
}

Timestamp ParseTimestamp(std::string_view text) {
  using namespace std::chrono;
  int y = 0;
  unsigned mo = 0, d = 0, h = 0, mi = 0, s = 0, ms = 0;
  char z = 0;
  const std::string buf(text);
  if (buf.size() != 24 ||
      std::sscanf(buf.c_str(), "%4d-%2u-%2uT%2u:%2u:%2u.%3u%c", &y, &mo, &d,
                  &h, &mi, &s, &ms, &z) != 8 ||
      z != 'Z') {
    throw Error(ErrorCode::kCorruptRecord, "bad timestamp '" + buf + "'");
  }
  const year_month_day ymd{year{y}, month{mo}, day{d}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) {
    throw Error(ErrorCode::kCorruptRecord, "bad timestamp '" + buf + "'");
  }
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s} +
         milliseconds{ms};
}

std::string_view ChoiceName(const Choice& choice) {
  switch (choice.index()) {
    case 0: return "keep_asr";
    case 1: return "accept_llm";
    default: return "manual";
  }
}

std::string_view StatusName(SessionStatus status) {
  return status == SessionStatus::kFinalized ? "finalized" : "in_progress";
}

UndecidedError::UndecidedError(std::vector<std::size_t> indices)
    : Error(ErrorCode::kUndecidedSentences,
            "undecided sentences: " + JoinIndices(indices)),
      indices_(std::move(indices)) {}

std::string NewSessionId() {
  thread_local std::mt19937_64 rng{std::random_device{}()};
  return fmt::format("{:016x}{:016x}", rng(), rng());
}

bool IsValidSessionId(std::string_view id) {
  return !id.empty() && id.size() <= 128 &&
         std::all_of(id.begin(), id.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '-' || c == '_';
         });
}

ReviewSession::ReviewSession(SessionRecord record, bool restoring)
    : record_(std::move(record)) {
  const ErrorCode code =
      restoring ? ErrorCode::kCorruptRecord : ErrorCode::kInvalidArgument;
  auto fail = [&](const std::string& what) {
    throw Error(code, "session " + record_.session_id + ": " + what);
  };
  if (!IsValidSessionId(record_.session_id)) fail("invalid session id");
  if (record_.sentences.empty()) fail("no sentences");
  if (record_.suggestions.size() != record_.sentences.size()) {
    fail(fmt::format("{} suggestions for {} sentences",
                     record_.suggestions.size(), record_.sentences.size()));
  }
  for (std::size_t k = 0; k < record_.sentences.size(); ++k) {
    if (record_.sentences[k].index != k) {
      fail(fmt::format("sentence at position {} has index {}", k,
                       record_.sentences[k].index));
    }
    if (record_.suggestions[k].sentence_index != k) {
      fail(fmt::format("no suggestion for sentence {}", k));
    }
    if (record_.suggestions[k].corrected_text.empty()) {
      fail(fmt::format("empty suggestion for sentence {}", k));
    }
  }
  for (const auto& [index, decision] : record_.decisions) {
    if (index >= record_.sentences.size()) {
      fail(fmt::format("decision for unknown sentence {}", index));
    }
    if (const auto* manual = std::get_if<ManualEdit>(&decision.choice);
        manual != nullptr && manual->text.empty()) {
      fail(fmt::format("empty manual edit for sentence {}", index));
    }
  }
  if (record_.status == SessionStatus::kFinalized) {
    if (!Undecided().empty()) fail("finalized with undecided sentences");
    if (!record_.final_text) fail("finalized without final text");
  } else if (record_.final_text) {
    fail("final text present on an in-progress session");
  }
}

ReviewSession ReviewSession::Create(std::string session_id,
                                    std::string recording_id,
                                    std::string asr_transcript,
                                    std::vector<Sentence> sentences,
                                    std::vector<Suggestion> suggestions,
                                    std::optional<std::string> audio_path,
                                    Timestamp now) {
  SessionRecord r;
  r.session_id = std::move(session_id);
  r.recording_id = std::move(recording_id);
  r.audio_path = std::move(audio_path);
  r.asr_transcript = std::move(asr_transcript);
  r.sentences = std::move(sentences);
  r.suggestions = std::move(suggestions);
  r.created_at = now;
  r.updated_at = now;
  return ReviewSession(std::move(r));
}

void ReviewSession::RecordDecision(std::size_t index, Choice choice,
                                   std::optional<std::string> note,
                                   Timestamp now) {
  if (record_.status == SessionStatus::kFinalized) {
    throw Error(ErrorCode::kSessionFinalized,
                "session " + record_.session_id + " is finalized");
  }
  if (index >= record_.sentences.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("sentence index {} out of range [0, {})", index,
                            record_.sentences.size()));
  }
  if (const auto* manual = std::get_if<ManualEdit>(&choice);
      manual != nullptr && manual->text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "manual edit text is empty");
  }
  Touch(now);
  record_.decisions.insert_or_assign(
      index, Decision{std::move(choice), record_.updated_at, std::move(note)});
}

std::string ReviewSession::ResolvedText(std::size_t index) const {
  const auto it = record_.decisions.find(index);
  if (it == record_.decisions.end()) return record_.sentences.at(index).text;
  return std::visit(
      [&](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, KeepAsr>) {
          return record_.sentences[index].text;
        } else if constexpr (std::is_same_v<T, AcceptLlm>) {
          return record_.suggestions[index].corrected_text;
        } else {
          return c.text;
        }
      },
      it->second.choice);
}

std::vector<std::size_t> ReviewSession::Undecided() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < record_.sentences.size(); ++k) {
    if (!record_.decisions.contains(k)) out.push_back(k);
  }
  return out;
}

Transcript ReviewSession::Finalize(Timestamp now) {
  Transcript out;
  out.role = TranscriptRole::kFinal;
  out.method = Method::kManualLlm;
  if (record_.status == SessionStatus::kFinalized) {
    out.text = *record_.final_text;
    return out;
  }
  if (std::vector<std::size_t> missing = Undecided(); !missing.empty()) {
    throw UndecidedError(std::move(missing));
  }
  for (std::size_t k = 0; k < record_.sentences.size(); ++k) {
    if (k > 0) out.text += ' ';
    out.text += ResolvedText(k);
  }
  Touch(now);
  record_.final_text = out.text;
  record_.status = SessionStatus::kFinalized;
  return out;
}

std::optional<Decision> ReviewSession::decision(std::size_t index) const {
  const auto it = record_.decisions.find(index);
  if (it == record_.decisions.end()) return std::nullopt;
  return it->second;
}

void ReviewSession::Touch(Timestamp now) {
  record_.updated_at =
      std::max(now, record_.updated_at + std::chrono::milliseconds(1));
}

}  // namespace medtx
