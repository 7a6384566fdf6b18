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


#include "medtx/provider.h"

#include <chrono>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "medtx/error.h"
#include "medtx/prompts.h"
#include "medtx/text.h"

namespace medtx {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string ExtractContent(const std::string& body) {
  const json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kHttpStatus, "provider returned a non-JSON body");
  }
  if (auto it = doc.find("choices");
      it != doc.end() && it->is_array() && !it->empty()) {
    const json& choice = it->front();
    if (choice.contains("message") && choice["message"].contains("content") &&
        choice["message"]["content"].is_string()) {
      return choice["message"]["content"].get<std::string>();
    }
    if (choice.contains("text") && choice["text"].is_string()) {
      return choice["text"].get<std::string>();
    }
  }
  throw Error(ErrorCode::kHttpStatus,
              "provider response has no choices[0].message.content");
}

}  // namespace

void ProviderConfig::Validate() const {
  if (mock_file.empty()) {
    if (endpoint.empty()) {
      throw Error(ErrorCode::kConfig, "provider endpoint is not set");
    }
    if (model.empty()) {
      throw Error(ErrorCode::kConfig, "provider model is not set");
    }
  }
  if (!(timeout_seconds > 0)) {
    throw Error(ErrorCode::kConfig, "provider timeout must be positive");
  }
  if (max_retries < 0) {
    throw Error(ErrorCode::kConfig, "max retries must be non-negative");
  }
  if (parallelism < 1) {
    throw Error(ErrorCode::kConfig, "parallelism must be at least 1");
  }
  if (initial_backoff_ms < 0) {
    throw Error(ErrorCode::kConfig, "backoff must be non-negative");
  }
}

HttpProvider::HttpProvider(ProviderConfig config) : config_(std::move(config)) {
  config_.Validate();
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(config_.endpoint, m, kUrl)) {
    throw Error(ErrorCode::kConfig,
                "provider endpoint is not an http(s) URL: " + config_.endpoint);
  }
  scheme_host_port_ = m[1].str();
  path_ = m[2].matched ? m[2].str() : "/";
}

Completion HttpProvider::Complete(std::string_view prompt) const {
  json body = {{"model", config_.model},
               {"messages", json::array({{{"role", "user"},
                                          {"content", std::string(prompt)}}})}};
  Completion out;
  out.meta.model = config_.model;
  if (config_.temperature) {
    body["temperature"] = *config_.temperature;
    out.meta.parameters["temperature"] = fmt::format("{}", *config_.temperature);
  }
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str());
        key != nullptr && *key != '\0') {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }

  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::duration<double>(config_.timeout_seconds));
  const auto start = Clock::now();
  bool all_timeouts = true;
  std::string last_failure;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(
          static_cast<std::int64_t>(config_.initial_backoff_ms) << (attempt - 1)));
    }
    out.meta.attempts = attempt + 1;

    httplib::Client client(scheme_host_port_);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Result res = client.Post(path_, headers, payload, "application/json");
    if (!res) {
      const httplib::Error err = res.error();
      // Failing to connect at all means unreachable, not slow.
      const bool timed_out =
          err == httplib::Error::Read || err == httplib::Error::Write;
      all_timeouts = all_timeouts && timed_out;
      last_failure = httplib::to_string(err);
      continue;
    }
    const int status = res->status;
    if (status == 401 || status == 403) {
      throw Error(ErrorCode::kAuthentication,
                  fmt::format("provider rejected credentials (HTTP {}); check ${}",
                              status, config_.api_key_env));
    }
    if (status == 429 || status >= 500) {
      all_timeouts = false;
      last_failure = fmt::format("HTTP {}", status);
      continue;
    }
    if (status < 200 || status >= 300) {
      throw Error(ErrorCode::kHttpStatus,
                  fmt::format("provider returned HTTP {}: {}", status,
                              res->body.substr(0, 200)));
    }
    out.text = ExtractContent(res->body);
    out.meta.raw_response = out.text;
    out.meta.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              Clock::now() - start)
                              .count();
    return out;
  }
  if (all_timeouts) {
    throw Error(ErrorCode::kTimeout,
                fmt::format("provider timed out after {} attempt(s)",
                            config_.max_retries + 1));
  }
  throw Error(ErrorCode::kRetriesExhausted,
              fmt::format("provider unavailable after {} attempt(s): {}",
                          config_.max_retries + 1, last_failure));
}

MockProvider MockProvider::Parse(std::string_view jsonl) {
  MockProvider mock;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const json entry = json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.is_object() ||
        !entry.contains("input") || !entry["input"].is_string() ||
        !entry.contains("response") || !entry["response"].is_string()) {
      throw Error(ErrorCode::kConfig,
                  fmt::format("mock file line {}: expected an object with "
                              "string fields 'input' and 'response'",
                              line_no));
    }
    mock.Add(entry["input"].get<std::string>(),
             entry["response"].get<std::string>());
  }
  return mock;
}

MockProvider MockProvider::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read mock file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

void MockProvider::Add(std::string input, std::string response) {
  const std::size_t idx = entries_.size();
  exact_.try_emplace(std::string(Trim(input)), idx);
  normalized_.try_emplace(TokenSurfaces(input), idx);
  entries_.emplace_back(std::move(input), std::move(response));
}

std::string_view MockProvider::PromptPayload(std::string_view prompt) {
  if (auto s = SentenceTemplate().Extract(prompt)) return *s;
  if (auto s = OneSetTemplate().Extract(prompt)) return *s;
  return prompt;
}

const std::string* MockProvider::Lookup(std::string_view input) const {
  if (auto it = exact_.find(std::string(Trim(input))); it != exact_.end()) {
    return &entries_[it->second].second;
  }
  if (auto it = normalized_.find(TokenSurfaces(input));
      it != normalized_.end()) {
    return &entries_[it->second].second;
  }
  return nullptr;
}

Completion MockProvider::Complete(std::string_view prompt) const {
  const std::string_view payload = PromptPayload(prompt);
  Completion out;
  const std::string* hit = Lookup(payload);
  out.text = hit != nullptr ? *hit : std::string(payload);
  out.meta.model = "mock";
  out.meta.attempts = 1;
  out.meta.raw_response = out.text;
  return out;
}

std::unique_ptr<CompletionProvider> MakeProvider(const ProviderConfig& config) {
  config.Validate();
  if (!config.mock_file.empty()) {
    return std::make_unique<MockProvider>(MockProvider::Load(config.mock_file));
  }
  return std::make_unique<HttpProvider>(config);
}

Completion Complete(const ProviderConfig& config, std::string_view prompt) {
  return MakeProvider(config)->Complete(prompt);
}

}  // namespace medtx
