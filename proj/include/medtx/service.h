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


#ifndef MEDTX_SERVICE_H_
#define MEDTX_SERVICE_H_

#include <functional>
#include <memory>
#include <string>

#include "medtx/config.h"
#include "medtx/provider.h"
#include "medtx/session.h"

namespace medtx {

inline constexpr std::string_view kVersion = "0.1.0";

// HTTP/JSON front end for review sessions. Every state change goes through
// ReviewSession and SessionStore; writes to one session are serialized.
//
//   GET  /health
//   POST /sessions                      {recording_id, asr_transcript |
//                                        asr_fetch{audio_ref}, run_llm,
//                                        session_id?}
//   GET  /sessions, /sessions/{id}, /sessions/{id}/sentences
//   POST /sessions/{id}/sentences/{index}/decision  {choice, text?, note?}
//   POST /sessions/{id}/finalize
//   GET  /sessions/{id}/metrics
//   GET  /audio/{recording_id}          (Range requests supported)
//
// Errors are {error_code, message, details}.
class Service {
 public:
  using ClockFn = std::function<Timestamp()>;

  // Throws kConfig for an invalid config.
  Service(ServiceConfig config,
          std::shared_ptr<const CompletionProvider> provider, int parallelism,
          ClockFn clock = Now);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds the configured address. Port 0 picks a free port. Throws kBind.
  int Bind();
  // Serves until Stop(). Requires Bind().
  void Listen();
  // Bind() then Listen() on a background thread.
  int Start();
  // Stops accepting, lets in-flight requests finish, joins the thread.
  void Stop();

  int port() const { return port_; }

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

// Runs a service until SIGINT or SIGTERM.
void Serve(const AppConfig& config);

}  // namespace medtx

#endif  // MEDTX_SERVICE_H_
