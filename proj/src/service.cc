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


#include "medtx/service.h"

#include <atomic>
#include <csignal>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "medtx/error.h"
#include "medtx/pipeline.h"
#include "medtx/report.h"
#include "medtx/session_store.h"
#include "medtx/terms.h"

namespace medtx {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr std::pair<std::string_view, std::string_view> kAudioTypes[] = {
    {".wav", "audio/wav"}, {".mp3", "audio/mpeg"}, {".m4a", "audio/mp4"}};

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kEmptyReference:
    case ErrorCode::kConfig:
      return 400;
    case ErrorCode::kNotFound:
    case ErrorCode::kNoReference:
      return 404;
    case ErrorCode::kSessionFinalized:
    case ErrorCode::kUndecidedSentences:
    case ErrorCode::kAlreadyExists:
      return 409;
    case ErrorCode::kTimeout:
      return 504;
    case ErrorCode::kAuthentication:
    case ErrorCode::kHttpStatus:
    case ErrorCode::kRetriesExhausted:
      return 502;
    default:
      return 500;
  }
}

void SendError(httplib::Response& res, int status, std::string_view code,
               std::string_view message, json details = json::object()) {
  res.status = status;
  res.set_content(json{{"error_code", code},
                       {"message", message},
                       {"details", std::move(details)}}
                      .dump(),
                  "application/json");
}

void SendJson(httplib::Response& res, int status, const ojson& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Recording ids and audio refs name files directly under a configured
// directory, so separators and dot-dot are refused.
void CheckFileStem(std::string_view name, std::string_view what) {
  if (name.empty() || name.find('/') != std::string_view::npos ||
      name.find('\\') != std::string_view::npos ||
      name.find("..") != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("invalid {} '{}'", what, name));
  }
}

json ParseBody(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  json body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "request body must be a JSON object");
  }
  return body;
}

std::string RequireString(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_string() ||
      body[key].get<std::string>().empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("'{}' must be a non-empty string", key));
  }
  return body[key].get<std::string>();
}

ojson DecisionJson(const Decision& d) {
  ojson out = {{"choice", ChoiceName(d.choice)}};
  if (const auto* m = std::get_if<ManualEdit>(&d.choice)) out["text"] = m->text;
  out["decided_at"] = FormatTimestamp(d.decided_at);
  if (d.note) out["note"] = *d.note;
  return out;
}

ojson SentenceJson(const ReviewSession& session, std::size_t index) {
  const SessionRecord& r = session.record();
  const std::optional<Decision> d = session.decision(index);
  return {{"index", index},
          {"asr_text", r.sentences[index].text},
          {"suggestion_text", r.suggestions[index].corrected_text},
          {"rationale", r.suggestions[index].rationale},
          {"decision", d ? DecisionJson(*d) : ojson(nullptr)},
          {"resolved_text", d ? ojson(session.ResolvedText(index)) : ojson(nullptr)}};
}

ojson SummaryJson(const ReviewSession& session) {
  const SessionRecord& r = session.record();
  return {{"session_id", r.session_id},
          {"recording_id", r.recording_id},
          {"status", StatusName(r.status)},
          {"decided", session.decided()},
          {"total", session.size()},
          {"created_at", FormatTimestamp(r.created_at)},
          {"updated_at", FormatTimestamp(r.updated_at)}};
}

ojson RowJson(const MetricsRow& row) {
  return {{"recording", row.recording_id},
          {"method", MethodName(row.method)},
          {"wer", row.wer().value()},
          {"kmter", row.kmter ? ojson(row.kmter->value()) : ojson(nullptr)},
          {"s", row.substitutions},
          {"d", row.deletions},
          {"i", row.insertions},
          {"n", row.reference_length}};
}

Choice ParseChoice(const json& body) {
  const std::string choice = RequireString(body, "choice");
  if (choice == "keep_asr") return KeepAsr{};
  if (choice == "accept_llm") return AcceptLlm{};
  if (choice == "manual") {
    if (!body.contains("text") || !body["text"].is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "manual choice needs 'text'");
    }
    return ManualEdit{body["text"].get<std::string>()};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "choice must be keep_asr, accept_llm or manual");
}

std::atomic<bool> g_stop_requested{false};

extern "C" void OnStopSignal(int) { g_stop_requested = true; }

}  // namespace

class Service::Impl {
 public:
  Impl(ServiceConfig config, std::shared_ptr<const CompletionProvider> provider,
       int parallelism, ClockFn clock)
      : config_(std::move(config)),
        provider_(std::move(provider)),
        parallelism_(parallelism),
        clock_(std::move(clock)),
        store_((config_.Validate(), config_.data_dir)) {
    if (parallelism_ < 1) {
      throw Error(ErrorCode::kConfig, "parallelism must be at least 1");
    }
    Routes();
  }

  httplib::Server& server() { return server_; }
  std::thread& thread() { return thread_; }
  const ServiceConfig& config() const { return config_; }

 private:
  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  static Handler Guard(Handler inner) {
    return [inner = std::move(inner)](const httplib::Request& req,
                                      httplib::Response& res) {
      try {
        inner(req, res);
      } catch (const UndecidedError& e) {
        SendError(res, 409, ErrorCodeName(e.code()), e.what(),
                  json{{"undecided", e.indices()}});
      } catch (const Error& e) {
        SendError(res, HttpStatusFor(e.code()), ErrorCodeName(e.code()),
                  e.what());
      } catch (const std::exception& e) {
        SendError(res, 500, ErrorCodeName(ErrorCode::kInternal), e.what());
      }
    };
  }

  std::shared_ptr<std::mutex> LockFor(const std::string& id) {
    std::lock_guard<std::mutex> guard(locks_mu_);
    auto& slot = locks_[id];
    if (!slot) slot = std::make_shared<std::mutex>();
    return slot;
  }

  std::optional<std::filesystem::path> FindAudio(std::string_view stem) const {
    for (const auto& [ext, mime] : kAudioTypes) {
      std::filesystem::path p = config_.audio_dir / (std::string(stem) + std::string(ext));
      if (std::filesystem::is_regular_file(p)) return p;
    }
    return std::nullopt;
  }

  std::string FetchAsr(const json& fetch) const {
    if (!fetch.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "'asr_fetch' must be an object");
    }
    const std::string ref = RequireString(fetch, "audio_ref");
    CheckFileStem(ref, "audio_ref");
    const std::filesystem::path audio = config_.audio_dir / ref;
    if (!std::filesystem::is_regular_file(audio)) {
      throw Error(ErrorCode::kNotFound, "no audio file '" + ref + "'");
    }
    if (config_.asr_endpoint.empty()) {
      std::filesystem::path sidecar = audio;
      sidecar.replace_extension(".txt");
      if (!std::filesystem::is_regular_file(sidecar)) {
        throw Error(ErrorCode::kNotFound,
                    "no ASR endpoint configured and no transcript " +
                        sidecar.filename().string());
      }
      return ReadFile(sidecar);
    }
    return Transcribe(audio);
  }

  // Whisper-style multipart upload; the response is {"text": ...}.
  std::string Transcribe(const std::filesystem::path& audio) const {
    const std::string& url = config_.asr_endpoint;
    const auto scheme_end = url.find("://");
    const auto path_at = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    httplib::Client client(url.substr(0, path_at));
    client.set_read_timeout(std::chrono::seconds(300));
    httplib::Headers headers;
    if (const char* key = std::getenv("MEDTX_ASR_API_KEY"); key && *key) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    const std::string ext = audio.extension().string();
    std::string mime = "application/octet-stream";
    for (const auto& [e, m] : kAudioTypes) {
      if (e == ext) mime = m;
    }
    httplib::MultipartFormDataItems items = {
        {"file", ReadFile(audio), audio.filename().string(), mime},
        {"model", config_.asr_model, "", ""}};
    auto res = client.Post(
        path_at == std::string::npos ? "/" : url.substr(path_at), headers, items);
    if (!res) {
      throw Error(ErrorCode::kRetriesExhausted,
                  "ASR endpoint unreachable: " + httplib::to_string(res.error()));
    }
    if (res->status < 200 || res->status >= 300) {
      throw Error(ErrorCode::kHttpStatus,
                  fmt::format("ASR endpoint returned HTTP {}", res->status));
    }
    const json body = json::parse(res->body, nullptr, false);
    if (body.is_discarded() || !body.contains("text") || !body["text"].is_string()) {
      throw Error(ErrorCode::kHttpStatus, "ASR response has no 'text'");
    }
    return body["text"].get<std::string>();
  }

  void Routes() {
    server_.Get("/health", Guard([](const httplib::Request&, httplib::Response& res) {
      SendJson(res, 200, {{"status", "ok"}, {"version", kVersion}});
    }));

    server_.Post("/sessions", Guard([this](const httplib::Request& req,
                                          httplib::Response& res) {
      const json body = ParseBody(req);
      const std::string recording_id = RequireString(body, "recording_id");
      CheckFileStem(recording_id, "recording_id");
      std::string id = NewSessionId();
      if (body.contains("session_id")) {
        id = RequireString(body, "session_id");
        if (!IsValidSessionId(id)) {
          throw Error(ErrorCode::kInvalidArgument, "invalid session_id '" + id + "'");
        }
      }
      std::string asr;
      if (body.contains("asr_transcript")) {
        asr = RequireString(body, "asr_transcript");
      } else if (body.contains("asr_fetch")) {
        asr = FetchAsr(body["asr_fetch"]);
      } else {
        throw Error(ErrorCode::kInvalidArgument,
                    "one of 'asr_transcript' or 'asr_fetch' is required");
      }
      const bool run_llm = body.value("run_llm", false);
      if (run_llm && !provider_) {
        throw Error(ErrorCode::kConfig, "no LLM provider is configured");
      }
      std::optional<std::string> audio_path;
      if (auto audio = FindAudio(recording_id)) audio_path = audio->filename().string();

      auto lock = LockFor(id);
      std::lock_guard<std::mutex> guard(*lock);
      if (store_.Contains(id)) {
        throw Error(ErrorCode::kAlreadyExists, "session '" + id + "' already exists");
      }
      const ReviewSession session =
          StartReview(id, recording_id, std::move(asr),
                      run_llm ? provider_.get() : nullptr, parallelism_,
                      std::move(audio_path), clock_());
      store_.Save(session);
      SendJson(res, 201, SessionToJson(session));
    }));

    server_.Get("/sessions", Guard([this](const httplib::Request&,
                                         httplib::Response& res) {
      ojson list = ojson::array();
      for (const std::string& id : store_.List()) {
        auto lock = LockFor(id);
        std::lock_guard<std::mutex> guard(*lock);
        list.push_back(SummaryJson(store_.Load(id)));
      }
      SendJson(res, 200, list);
    }));

    server_.Get(R"(/sessions/([A-Za-z0-9_-]+))",
                Guard([this](const httplib::Request& req, httplib::Response& res) {
                  SendJson(res, 200, SessionToJson(Read(req.matches[1])));
                }));

    server_.Get(R"(/sessions/([A-Za-z0-9_-]+)/sentences)",
                Guard([this](const httplib::Request& req, httplib::Response& res) {
                  const ReviewSession session = Read(req.matches[1]);
                  ojson list = ojson::array();
                  for (std::size_t k = 0; k < session.size(); ++k) {
                    list.push_back(SentenceJson(session, k));
                  }
                  SendJson(res, 200, list);
                }));

    server_.Post(
        R"(/sessions/([A-Za-z0-9_-]+)/sentences/(\d+)/decision)",
        Guard([this](const httplib::Request& req, httplib::Response& res) {
          const std::string id = req.matches[1];
          std::size_t index = 0;
          try {
            index = std::stoul(req.matches[2]);
          } catch (const std::exception&) {
            throw Error(ErrorCode::kInvalidArgument, "bad sentence index");
          }
          const json body = ParseBody(req);
          Choice choice = ParseChoice(body);
          std::optional<std::string> note;
          if (body.contains("note") && body["note"].is_string()) {
            note = body["note"].get<std::string>();
          }
          auto lock = LockFor(id);
          std::lock_guard<std::mutex> guard(*lock);
          ReviewSession session = store_.Load(id);
          session.RecordDecision(index, std::move(choice), std::move(note), clock_());
          store_.Save(session);
          SendJson(res, 200, SentenceJson(session, index));
        }));

    server_.Post(R"(/sessions/([A-Za-z0-9_-]+)/finalize)",
                 Guard([this](const httplib::Request& req, httplib::Response& res) {
                   const std::string id = req.matches[1];
                   auto lock = LockFor(id);
                   std::lock_guard<std::mutex> guard(*lock);
                   ReviewSession session = store_.Load(id);
                   const bool was_final = session.status() == SessionStatus::kFinalized;
                   const Transcript final = session.Finalize(clock_());
                   if (!was_final) store_.Save(session);
                   SendJson(res, 200, {{"session_id", id}, {"final_text", final.text}});
                 }));

    server_.Get(R"(/sessions/([A-Za-z0-9_-]+)/metrics)",
                Guard([this](const httplib::Request& req, httplib::Response& res) {
                  const ReviewSession session = Read(req.matches[1]);
                  const std::string& recording = session.record().recording_id;
                  if (!config_.reference_dir) {
                    throw Error(ErrorCode::kNoReference,
                                "no reference directory is configured");
                  }
                  const auto ref_path = *config_.reference_dir / (recording + ".txt");
                  if (!std::filesystem::is_regular_file(ref_path)) {
                    throw Error(ErrorCode::kNoReference,
                                "no reference transcript for '" + recording + "'");
                  }
                  const std::string reference = ReadFile(ref_path);
                  std::optional<TermList> terms;
                  if (const auto terms_path =
                          *config_.reference_dir / (recording + ".terms.txt");
                      std::filesystem::is_regular_file(terms_path)) {
                    terms = TermList::Load(terms_path.string());
                  }
                  const MetricsReport report = MetricsReport::Build(
                      SessionMetrics(session, reference, terms ? &*terms : nullptr));
                  ojson rows = ojson::array();
                  for (const MetricsRow& row : report.rows()) rows.push_back(RowJson(row));
                  SendJson(res, 200,
                           {{"recording_id", recording},
                            {"rows", std::move(rows)},
                            {"csv", report.ToCsv()}});
                }));

    server_.Get(R"(/audio/([^/]+))",
                Guard([this](const httplib::Request& req, httplib::Response& res) {
                  const std::string recording = req.matches[1];
                  CheckFileStem(recording, "recording_id");
                  const auto audio = FindAudio(recording);
                  if (!audio) {
                    throw Error(ErrorCode::kNotFound,
                                "no audio for recording '" + recording + "'");
                  }
                  std::string mime = "application/octet-stream";
                  for (const auto& [ext, m] : kAudioTypes) {
                    if (audio->extension() == ext) mime = m;
                  }
                  res.set_header("Accept-Ranges", "bytes");
                  res.set_content(ReadFile(*audio), mime);
                }));

    server_.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });

    server_.set_post_routing_handler([this](const httplib::Request& req,
                                            httplib::Response& res) {
      const std::string origin = req.get_header_value("Origin");
      if (origin.empty()) return;
      for (const std::string& allowed : config_.cors_allow) {
        if (allowed == "*" || allowed == origin) {
          res.set_header("Access-Control-Allow-Origin", origin);
          res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
          res.set_header("Access-Control-Allow-Headers", "Content-Type, Range");
          res.set_header("Vary", "Origin");
          break;
        }
      }
    });

    server_.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) {
        SendError(res, res.status, res.status == 404 ? "not_found" : "http_error",
                  fmt::format("HTTP {}", res.status));
      }
    });
  }

  ReviewSession Read(const std::string& id) {
    auto lock = LockFor(id);
    std::lock_guard<std::mutex> guard(*lock);
    return store_.Load(id);
  }

  ServiceConfig config_;
  std::shared_ptr<const CompletionProvider> provider_;
  int parallelism_;
  ClockFn clock_;
  SessionStore store_;
  httplib::Server server_;
  std::thread thread_;
  std::mutex locks_mu_;
  std::map<std::string, std::shared_ptr<std::mutex>> locks_;
};

Service::Service(ServiceConfig config,
                 std::shared_ptr<const CompletionProvider> provider,
                 int parallelism, ClockFn clock)
    : impl_(std::make_unique<Impl>(std::move(config), std::move(provider),
                                   parallelism, std::move(clock))) {}

Service::~Service() { Stop(); }

int Service::Bind() {
  const ServiceConfig& c = impl_->config();
  httplib::Server& server = impl_->server();
  if (c.port == 0) {
    port_ = server.bind_to_any_port(c.host);
  } else if (server.bind_to_port(c.host, c.port)) {
    port_ = c.port;
  } else {
    port_ = -1;
  }
  if (port_ <= 0) {
    throw Error(ErrorCode::kBind,
                fmt::format("cannot bind {}:{}", c.host, c.port));
  }
  return port_;
}

void Service::Listen() { impl_->server().listen_after_bind(); }

int Service::Start() {
  const int port = Bind();
  impl_->thread() = std::thread([this] { Listen(); });
  impl_->server().wait_until_ready();
  return port;
}

void Service::Stop() {
  if (!impl_) return;
  impl_->server().stop();
  if (impl_->thread().joinable()) impl_->thread().join();
}

void Serve(const AppConfig& config) {
  std::shared_ptr<const CompletionProvider> provider;
  if (!config.provider.endpoint.empty() || !config.provider.mock_file.empty()) {
    provider = MakeProvider(config.provider);
  }
  Service service(config.service, provider, config.provider.parallelism);
  service.Bind();
  g_stop_requested = false;
  std::signal(SIGINT, OnStopSignal);
  std::signal(SIGTERM, OnStopSignal);
  std::jthread watcher([&service](std::stop_token token) {
    while (!token.stop_requested() && !g_stop_requested) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    // A signal can land before the listener is up; repeat until it returns.
    while (!token.stop_requested()) {
      service.Stop();
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
  });
  fmt::print(stderr, "medtx service listening on {}:{}\n", config.service.host,
             service.port());
  service.Listen();
  watcher.request_stop();
}

}  // namespace medtx
