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


/* C interface to the medtx transcription-correction library.
 *
 * Every function returns a medtx_status. On failure a description is
 * available from medtx_last_error() on the calling thread until the next
 * call into the library. Strings returned through `char**` out-parameters
 * are heap-allocated and must be released with medtx_free(). Handles are
 * opaque and released with their *_destroy function; passing NULL to a
 * destroy function is a no-op.
 */

#ifndef MEDTX_MEDTX_H_
#define MEDTX_MEDTX_H_

#include <stddef.h>

#if defined(_WIN32)
#define MEDTX_API __declspec(dllexport)
#else
#define MEDTX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum medtx_status {
  MEDTX_OK = 0,
  MEDTX_ERR_INVALID_ARGUMENT = 1,
  MEDTX_ERR_EMPTY_REFERENCE = 2,
  MEDTX_ERR_IO = 3,
  MEDTX_ERR_NOT_FOUND = 4,
  MEDTX_ERR_SCHEMA_VERSION = 5,
  MEDTX_ERR_CORRUPT_RECORD = 6,
  MEDTX_ERR_SESSION_FINALIZED = 7,
  MEDTX_ERR_UNDECIDED = 8,
  MEDTX_ERR_DUPLICATE_ROW = 9,
  MEDTX_ERR_TIMEOUT = 10,
  MEDTX_ERR_AUTHENTICATION = 11,
  MEDTX_ERR_HTTP_STATUS = 12,
  MEDTX_ERR_RETRIES_EXHAUSTED = 13,
  MEDTX_ERR_CONFIG = 14,
  MEDTX_ERR_BIND = 15,
  MEDTX_ERR_NO_REFERENCE = 16,
  MEDTX_ERR_ALREADY_EXISTS = 17,
  MEDTX_ERR_INTERNAL = 18
} medtx_status;

typedef enum medtx_method {
  MEDTX_METHOD_INITIAL_ASR = 0,
  MEDTX_METHOD_ONE_SET = 1,
  MEDTX_METHOD_SENTENCE_BY_SENTENCE = 2,
  MEDTX_METHOD_MANUAL_LLM = 3
} medtx_method;

typedef enum medtx_report_format {
  MEDTX_FORMAT_CSV = 0,
  MEDTX_FORMAT_TABLE = 1
} medtx_report_format;

typedef enum medtx_choice {
  MEDTX_KEEP_ASR = 0,
  MEDTX_ACCEPT_LLM = 1,
  MEDTX_MANUAL = 2
} medtx_choice;

typedef struct medtx_report medtx_report;
typedef struct medtx_provider medtx_provider;
typedef struct medtx_session medtx_session;

/* Scores of one hypothesis against one reference. */
typedef struct medtx_metrics {
  size_t substitutions;
  size_t deletions;
  size_t insertions;
  size_t reference_length;
  double wer;
  int has_kmter; /* 0 when no term list was given */
  size_t kmter_incorrect;
  size_t kmter_total;
  double kmter;
} medtx_metrics;

MEDTX_API const char* medtx_version(void);
MEDTX_API const char* medtx_status_name(medtx_status status);
MEDTX_API const char* medtx_last_error(void);
MEDTX_API void medtx_free(char* str);

/* ---- metrics ---------------------------------------------------------- */

/* `terms` is the text of a term-list file (one term per line, '#' comments)
 * or NULL. */
MEDTX_API medtx_status medtx_score(const char* reference,
                                   const char* hypothesis, const char* terms,
                                   medtx_metrics* out);

/* Per-term verdicts as "correct\tterm" / "missing\tterm" lines. */
MEDTX_API medtx_status medtx_term_verdicts(const char* terms,
                                           const char* hypothesis,
                                           char** out);

MEDTX_API medtx_status medtx_report_create(medtx_report** out);
MEDTX_API medtx_status medtx_report_parse_csv(const char* csv,
                                              medtx_report** out);
/* Rejects a repeated (recording, method) pair with MEDTX_ERR_DUPLICATE_ROW. */
MEDTX_API medtx_status medtx_report_add(medtx_report* report,
                                        const char* recording_id,
                                        medtx_method method,
                                        const medtx_metrics* metrics);
MEDTX_API medtx_status medtx_report_render(const medtx_report* report,
                                           medtx_report_format format,
                                           char** out);
MEDTX_API void medtx_report_destroy(medtx_report* report);

/* ---- correction ------------------------------------------------------- */

/* Provider from a config file ([provider] section). A non-NULL
 * `mock_override` replaces the configured backend with that mock file. */
MEDTX_API medtx_status medtx_provider_open(const char* config_path,
                                           const char* mock_override,
                                           medtx_provider** out);
MEDTX_API medtx_status medtx_provider_mock(const char* mock_path,
                                           medtx_provider** out);
MEDTX_API void medtx_provider_destroy(medtx_provider* provider);

/* Raw completion for a prompt. */
MEDTX_API medtx_status medtx_complete(const medtx_provider* provider,
                                      const char* prompt, char** out);

MEDTX_API medtx_status medtx_build_prompt(int sentence_mode,
                                          const char* text, char** out);

MEDTX_API medtx_status medtx_correct_one_set(const medtx_provider* provider,
                                             const char* text, char** out);

/* Sentence-by-sentence correction. `corrected` receives the transcript with
 * every suggestion accepted; `suggestions_json` a JSON array of suggestion
 * objects. Either out-parameter may be NULL. */
MEDTX_API medtx_status medtx_correct_sentences(const medtx_provider* provider,
                                               const char* text,
                                               char** corrected,
                                               char** suggestions_json);

/* ---- review sessions -------------------------------------------------- */

/* Starts a session from an ASR transcript. With a NULL provider every
 * suggestion equals its ASR sentence. A NULL `session_id` generates one. */
MEDTX_API medtx_status medtx_session_start(const char* session_id,
                                           const char* recording_id,
                                           const char* asr_transcript,
                                           const medtx_provider* provider,
                                           medtx_session** out);
MEDTX_API medtx_status medtx_session_load(const char* data_dir,
                                          const char* session_id,
                                          medtx_session** out);
MEDTX_API medtx_status medtx_session_save(const medtx_session* session,
                                          const char* data_dir);
MEDTX_API void medtx_session_destroy(medtx_session* session);

MEDTX_API medtx_status medtx_session_id(const medtx_session* session,
                                        char** out);
MEDTX_API medtx_status medtx_session_size(const medtx_session* session,
                                          size_t* sentences, size_t* decided);
MEDTX_API medtx_status medtx_session_sentence(const medtx_session* session,
                                              size_t index, char** asr_text,
                                              char** suggestion_text);
/* `text` is required for MEDTX_MANUAL and ignored otherwise. */
MEDTX_API medtx_status medtx_session_decide(medtx_session* session,
                                            size_t index, medtx_choice choice,
                                            const char* text);
/* On MEDTX_ERR_UNDECIDED the last-error message lists the indices. */
MEDTX_API medtx_status medtx_session_finalize(medtx_session* session,
                                              char** final_text);
MEDTX_API medtx_status medtx_session_to_json(const medtx_session* session,
                                             char** out);

/* ---- service ---------------------------------------------------------- */

/* Runs the HTTP service described by the config file until SIGINT/SIGTERM. */
MEDTX_API medtx_status medtx_serve(const char* config_path);

#ifdef __cplusplus
}
#endif

#endif /* MEDTX_MEDTX_H_ */
