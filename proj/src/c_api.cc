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


#include "medtx/medtx.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "medtx/config.h"
#include "medtx/correction.h"
#include "medtx/error.h"
#include "medtx/pipeline.h"
#include "medtx/prompts.h"
#include "medtx/report.h"
#include "medtx/service.h"
#include "medtx/session_store.h"
#include "medtx/terms.h"

struct medtx_report {
  std::vector<medtx::MetricsRow> rows;
};

struct medtx_provider {
  std::unique_ptr<medtx::CompletionProvider> impl;
  int parallelism = 1;
};

struct medtx_session {
  medtx::ReviewSession impl;
};

namespace {

thread_local std::string g_last_error;

static_assert(MEDTX_ERR_INTERNAL ==
              static_cast<int>(medtx::ErrorCode::kInternal));
static_assert(MEDTX_ERR_ALREADY_EXISTS ==
              static_cast<int>(medtx::ErrorCode::kAlreadyExists));

template <typename Fn>
medtx_status Call(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return MEDTX_OK;
  } catch (const medtx::Error& e) {
    g_last_error = e.what();
    return static_cast<medtx_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  }
  return MEDTX_ERR_INTERNAL;
}

void Require(const void* p, const char* what) {
  if (p == nullptr) {
    throw medtx::Error(medtx::ErrorCode::kInvalidArgument,
                       std::string(what) + " must not be NULL");
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

medtx::Method ToMethod(medtx_method m) {
  if (m < MEDTX_METHOD_INITIAL_ASR || m > MEDTX_METHOD_MANUAL_LLM) {
    throw medtx::Error(medtx::ErrorCode::kInvalidArgument, "unknown method");
  }
  return static_cast<medtx::Method>(m);
}

}  // namespace

extern "C" {

const char* medtx_version(void) { return medtx::kVersion.data(); }

const char* medtx_status_name(medtx_status status) {
  if (status == MEDTX_OK) return "ok";
  if (status < MEDTX_ERR_INVALID_ARGUMENT || status > MEDTX_ERR_INTERNAL) {
    return "unknown";
  }
  return medtx::ErrorCodeName(static_cast<medtx::ErrorCode>(status)).data();
}

const char* medtx_last_error(void) { return g_last_error.c_str(); }

void medtx_free(char* str) { std::free(str); }

medtx_status medtx_score(const char* reference, const char* hypothesis,
                         const char* terms, medtx_metrics* out) {
  return Call([&] {
    Require(reference, "reference");
    Require(hypothesis, "hypothesis");
    Require(out, "out");
    std::optional<medtx::TermList> list;
    if (terms != nullptr) list = medtx::TermList::Parse("terms", terms);
    const medtx::MetricsRow row =
        medtx::Score("", medtx::Method::kInitialAsr, reference, hypothesis,
                     list ? &*list : nullptr);
    medtx_metrics m{};
    m.substitutions = row.substitutions;
    m.deletions = row.deletions;
    m.insertions = row.insertions;
    m.reference_length = row.reference_length;
    m.wer = row.wer().value();
    if (row.kmter) {
      m.has_kmter = 1;
      m.kmter_incorrect = row.kmter->numerator;
      m.kmter_total = row.kmter->denominator;
      m.kmter = row.kmter->value();
    }
    *out = m;
  });
}

medtx_status medtx_term_verdicts(const char* terms, const char* hypothesis,
                                 char** out) {
  return Call([&] {
    Require(terms, "terms");
    Require(hypothesis, "hypothesis");
    Require(out, "out");
    const medtx::KmterResult r =
        medtx::Kmter(medtx::TermList::Parse("terms", terms),
                     medtx::TokenSurfaces(hypothesis));
    std::string text;
    for (const medtx::TermVerdict& v : r.verdicts) {
      text += v.correct ? "correct\t" : "missing\t";
      text += v.term;
      text += '\n';
    }
    *out = Dup(text);
  });
}

medtx_status medtx_report_create(medtx_report** out) {
  return Call([&] {
    Require(out, "out");
    *out = new medtx_report();
  });
}

medtx_status medtx_report_parse_csv(const char* csv, medtx_report** out) {
  return Call([&] {
    Require(csv, "csv");
    Require(out, "out");
    auto report = std::make_unique<medtx_report>();
    report->rows = medtx::ParseMetricsCsv(csv);
    medtx::MetricsReport::Build(report->rows);
    *out = report.release();
  });
}

medtx_status medtx_report_add(medtx_report* report, const char* recording_id,
                              medtx_method method,
                              const medtx_metrics* metrics) {
  return Call([&] {
    Require(report, "report");
    Require(recording_id, "recording_id");
    Require(metrics, "metrics");
    medtx::MetricsRow row;
    row.recording_id = recording_id;
    row.method = ToMethod(method);
    row.substitutions = metrics->substitutions;
    row.deletions = metrics->deletions;
    row.insertions = metrics->insertions;
    row.reference_length = metrics->reference_length;
    if (row.reference_length == 0) {
      throw medtx::Error(medtx::ErrorCode::kEmptyReference,
                         "reference_length is zero");
    }
    if (metrics->has_kmter) {
      if (metrics->kmter_total == 0) {
        throw medtx::Error(medtx::ErrorCode::kInvalidArgument,
                           "kmter_total is zero");
      }
      row.kmter = medtx::Fraction{metrics->kmter_incorrect, metrics->kmter_total};
    }
    std::vector<medtx::MetricsRow> rows = report->rows;
    rows.push_back(row);
    medtx::MetricsReport::Build(rows);
    report->rows.push_back(std::move(row));
  });
}

medtx_status medtx_report_render(const medtx_report* report,
                                 medtx_report_format format, char** out) {
  return Call([&] {
    Require(report, "report");
    Require(out, "out");
    const medtx::MetricsReport built = medtx::MetricsReport::Build(report->rows);
    if (format == MEDTX_FORMAT_CSV) {
      *out = Dup(built.ToCsv());
    } else if (format == MEDTX_FORMAT_TABLE) {
      *out = Dup(built.ToTable());
    } else {
      throw medtx::Error(medtx::ErrorCode::kInvalidArgument, "unknown format");
    }
  });
}

void medtx_report_destroy(medtx_report* report) { delete report; }

medtx_status medtx_provider_open(const char* config_path,
                                 const char* mock_override,
                                 medtx_provider** out) {
  return Call([&] {
    Require(config_path, "config_path");
    Require(out, "out");
    medtx::ProviderConfig config = medtx::LoadConfig(config_path).provider;
    if (mock_override != nullptr) config.mock_file = mock_override;
    auto provider = std::make_unique<medtx_provider>();
    provider->impl = medtx::MakeProvider(config);
    provider->parallelism = config.parallelism;
    *out = provider.release();
  });
}

medtx_status medtx_provider_mock(const char* mock_path, medtx_provider** out) {
  return Call([&] {
    Require(mock_path, "mock_path");
    Require(out, "out");
    auto provider = std::make_unique<medtx_provider>();
    provider->impl = std::make_unique<medtx::MockProvider>(
        medtx::MockProvider::Load(mock_path));
    *out = provider.release();
  });
}

void medtx_provider_destroy(medtx_provider* provider) { delete provider; }

medtx_status medtx_complete(const medtx_provider* provider, const char* prompt,
                            char** out) {
  return Call([&] {
    Require(provider, "provider");
    Require(prompt, "prompt");
    Require(out, "out");
    *out = Dup(provider->impl->Complete(prompt).text);
  });
}

medtx_status medtx_build_prompt(int sentence_mode, const char* text,
                                char** out) {
  return Call([&] {
    Require(text, "text");
    Require(out, "out");
    *out = Dup(sentence_mode ? medtx::BuildSentencePrompt(text)
                             : medtx::BuildOneSetPrompt(text));
  });
}

medtx_status medtx_correct_one_set(const medtx_provider* provider,
                                   const char* text, char** out) {
  return Call([&] {
    Require(provider, "provider");
    Require(text, "text");
    Require(out, "out");
    medtx::Transcript in{medtx::TranscriptRole::kHypothesis,
                         medtx::Method::kInitialAsr, text};
    *out = Dup(medtx::CorrectOneSet(in, *provider->impl).text);
  });
}

medtx_status medtx_correct_sentences(const medtx_provider* provider,
                                     const char* text, char** corrected,
                                     char** suggestions_json) {
  return Call([&] {
    Require(provider, "provider");
    Require(text, "text");
    const std::vector<medtx::Suggestion> suggestions = medtx::CorrectSentences(
        medtx::SegmentSentences(text), *provider->impl, provider->parallelism);
    std::string corrected_text = medtx::AcceptAll(suggestions).text;
    std::string json;
    if (suggestions_json != nullptr) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const medtx::Suggestion& s : suggestions) {
        list.push_back(medtx::SuggestionToJson(s));
      }
      json = list.dump(2) + "\n";
    }
    char* c = corrected != nullptr ? Dup(corrected_text) : nullptr;
    if (suggestions_json != nullptr) {
      try {
        *suggestions_json = Dup(json);
      } catch (...) {
        std::free(c);
        throw;
      }
    }
    if (corrected != nullptr) *corrected = c;
  });
}

medtx_status medtx_session_start(const char* session_id,
                                 const char* recording_id,
                                 const char* asr_transcript,
                                 const medtx_provider* provider,
                                 medtx_session** out) {
  return Call([&] {
    Require(recording_id, "recording_id");
    Require(asr_transcript, "asr_transcript");
    Require(out, "out");
    const std::string id =
        session_id != nullptr ? session_id : medtx::NewSessionId();
    *out = new medtx_session{medtx::StartReview(
        id, recording_id, asr_transcript,
        provider != nullptr ? provider->impl.get() : nullptr,
        provider != nullptr ? provider->parallelism : 1)};
  });
}

medtx_status medtx_session_load(const char* data_dir, const char* session_id,
                                medtx_session** out) {
  return Call([&] {
    Require(data_dir, "data_dir");
    Require(session_id, "session_id");
    Require(out, "out");
    *out = new medtx_session{medtx::SessionStore(data_dir).Load(session_id)};
  });
}

medtx_status medtx_session_save(const medtx_session* session,
                                const char* data_dir) {
  return Call([&] {
    Require(session, "session");
    Require(data_dir, "data_dir");
    medtx::SessionStore(data_dir).Save(session->impl);
  });
}

void medtx_session_destroy(medtx_session* session) { delete session; }

medtx_status medtx_session_id(const medtx_session* session, char** out) {
  return Call([&] {
    Require(session, "session");
    Require(out, "out");
    *out = Dup(session->impl.id());
  });
}

medtx_status medtx_session_size(const medtx_session* session, size_t* sentences,
                                size_t* decided) {
  return Call([&] {
    Require(session, "session");
    if (sentences != nullptr) *sentences = session->impl.size();
    if (decided != nullptr) *decided = session->impl.decided();
  });
}

medtx_status medtx_session_sentence(const medtx_session* session, size_t index,
                                    char** asr_text, char** suggestion_text) {
  return Call([&] {
    Require(session, "session");
    const medtx::SessionRecord& r = session->impl.record();
    if (index >= r.sentences.size()) {
      throw medtx::Error(medtx::ErrorCode::kInvalidArgument,
                         "sentence index out of range");
    }
    char* a = asr_text != nullptr ? Dup(r.sentences[index].text) : nullptr;
    if (suggestion_text != nullptr) {
      try {
        *suggestion_text = Dup(r.suggestions[index].corrected_text);
      } catch (...) {
        std::free(a);
        throw;
      }
    }
    if (asr_text != nullptr) *asr_text = a;
  });
}

medtx_status medtx_session_decide(medtx_session* session, size_t index,
                                  medtx_choice choice, const char* text) {
  return Call([&] {
    Require(session, "session");
    switch (choice) {
      case MEDTX_KEEP_ASR:
        session->impl.RecordDecision(index, medtx::KeepAsr{});
        break;
      case MEDTX_ACCEPT_LLM:
        session->impl.RecordDecision(index, medtx::AcceptLlm{});
        break;
      case MEDTX_MANUAL:
        Require(text, "text");
        session->impl.RecordDecision(index, medtx::ManualEdit{text});
        break;
      default:
        throw medtx::Error(medtx::ErrorCode::kInvalidArgument, "unknown choice");
    }
  });
}

medtx_status medtx_session_finalize(medtx_session* session, char** final_text) {
  return Call([&] {
    Require(session, "session");
    const std::string text = session->impl.Finalize().text;
    if (final_text != nullptr) *final_text = Dup(text);
  });
}

medtx_status medtx_session_to_json(const medtx_session* session, char** out) {
  return Call([&] {
    Require(session, "session");
    Require(out, "out");
    *out = Dup(medtx::SerializeSession(session->impl));
  });
}

medtx_status medtx_serve(const char* config_path) {
  return Call([&] {
    Require(config_path, "config_path");
    medtx::Serve(medtx::LoadConfig(config_path));
  });
}

}  // extern "C"
