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


// Shared setup for tests that drive the HTTP service.

#ifndef MEDTX_TESTS_SERVICE_FIXTURE_H_
#define MEDTX_TESTS_SERVICE_FIXTURE_H_

#include <memory>
#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "medtx/config.h"
#include "medtx/provider.h"
#include "medtx/service.h"
#include "test_util.h"

namespace medtx::testing {

inline const Timestamp kFixedNow{std::chrono::milliseconds(1'760'000'000'000)};

// Service over temp directories: recording1 has a reference transcript, a
// term list and a small WAV file; "noref" only has audio.
class ServiceHarness {
 public:
  ServiceHarness() {
    namespace fs = std::filesystem;
    fs::create_directories(root_.path() / "data");
    fs::create_directories(root_.path() / "audio");
    fs::create_directories(root_.path() / "refs");
    WriteFile(root_.path() / "refs/recording1.txt",
              ReadData("recording1_reference.txt"));
    WriteFile(root_.path() / "refs/recording1.terms.txt",
              ReadData("recording1_terms.txt"));
    WriteFile(root_.path() / "audio/recording1.wav", AudioBytes());
    WriteFile(root_.path() / "audio/noref.mp3", "ID3-fake-mp3");
    WriteFile(root_.path() / "audio/noref.txt", "Skin normal. Labs pending.");

    ServiceConfig config;
    config.port = 0;
    config.data_dir = root_.path() / "data";
    config.audio_dir = root_.path() / "audio";
    config.reference_dir = root_.path() / "refs";
    config.cors_allow = {"http://localhost:5173"};
    provider_ = std::make_shared<MockProvider>(
        MockProvider::Load(DataPath("paper_examples.mock.jsonl").string()));
    service_ = std::make_unique<Service>(config, provider_, 4,
                                         [] { return kFixedNow; });
    port_ = service_->Start();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    client_->set_read_timeout(std::chrono::seconds(30));
  }
  ~ServiceHarness() { service_->Stop(); }

  static std::string AudioBytes() {
    std::string bytes = "RIFF....WAVEfmt ";
    for (int k = 0; k < 64; ++k) bytes += static_cast<char>('a' + k % 26);
    return bytes;
  }

  httplib::Client& client() { return *client_; }
  const MockProvider& provider() const { return *provider_; }
  std::filesystem::path data_dir() const { return root_.path() / "data"; }
  std::filesystem::path root() const { return root_.path(); }

  httplib::Result PostJson(const std::string& path, const nlohmann::json& body) {
    return client_->Post(path, body.dump(), "application/json");
  }

 private:
  TempDir root_;
  std::shared_ptr<MockProvider> provider_;
  std::unique_ptr<Service> service_;
  int port_ = 0;
  std::unique_ptr<httplib::Client> client_;
};

}  // namespace medtx::testing

#endif  // MEDTX_TESTS_SERVICE_FIXTURE_H_
