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


#ifndef MEDTX_PROVIDER_H_
#define MEDTX_PROVIDER_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace medtx {

struct ProviderConfig {
  // Chat-completion URL, e.g. "https://api.openai.com/v1/chat/completions".
  std::string endpoint;
  std::string model;
  // Name of the environment variable holding the API key. The key itself is
  // never stored in config or session files.
  std::string api_key_env = "MEDTX_API_KEY";
  double timeout_seconds = 60.0;
  int max_retries = 3;
  int parallelism = 4;
  int initial_backoff_ms = 500;
  std::optional<double> temperature;
  // When set, completions come from this lookup file instead of HTTP.
  std::string mock_file;

  // Throws kConfig.
  void Validate() const;
};

struct ProviderMeta {
  std::string model;
  std::int64_t latency_ms = 0;
  int attempts = 0;
  std::string raw_response;
  // Decoding parameters as sent; empty means provider defaults.
  std::map<std::string, std::string> parameters;
  // Set when the call failed and the result is a fallback.
  std::optional<std::string> error;

  friend bool operator==(const ProviderMeta&, const ProviderMeta&) = default;
};

struct Completion {
  std::string text;
  ProviderMeta meta;
};

// Text-completion backend. Implementations must allow concurrent calls.
class CompletionProvider {
 public:
  virtual ~CompletionProvider() = default;

  // Throws kTimeout, kAuthentication, kHttpStatus or kRetriesExhausted.
  virtual Completion Complete(std::string_view prompt) const = 0;
};

// OpenAI-style chat-completions client over cpp-httplib. Transport errors,
// timeouts, 429 and 5xx responses are retried with exponential backoff.
class HttpProvider : public CompletionProvider {
 public:
  explicit HttpProvider(ProviderConfig config);

  Completion Complete(std::string_view prompt) const override;

  const ProviderConfig& config() const { return config_; }

 private:
  ProviderConfig config_;
  std::string scheme_host_port_;
  std::string path_;
};

// Deterministic stand-in keyed on the text inserted into a correction
// prompt. Unknown inputs are echoed back unchanged.
class MockProvider : public CompletionProvider {
 public:
  MockProvider() = default;

  // JSON Lines: {"input": "...", "response": "..."} per line.
  static MockProvider Parse(std::string_view jsonl);
  static MockProvider Load(const std::string& path);

  void Add(std::string input, std::string response);
  std::size_t size() const { return entries_.size(); }

  Completion Complete(std::string_view prompt) const override;

  // Slot content of a correction prompt, or the prompt itself.
  static std::string_view PromptPayload(std::string_view prompt);

 private:
  const std::string* Lookup(std::string_view input) const;

  std::vector<std::pair<std::string, std::string>> entries_;
  std::map<std::string, std::size_t> exact_;
  std::map<std::vector<std::string>, std::size_t> normalized_;
};

// Validates the config, then builds a mock or HTTP provider.
std::unique_ptr<CompletionProvider> MakeProvider(const ProviderConfig& config);

Completion Complete(const ProviderConfig& config, std::string_view prompt);

}  // namespace medtx

#endif  // MEDTX_PROVIDER_H_
