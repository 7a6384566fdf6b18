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


#ifndef MEDTX_CONFIG_H_
#define MEDTX_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medtx/provider.h"

namespace medtx {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path data_dir;
  std::filesystem::path audio_dir;
  // `<recording_id>.txt` references and optional `<recording_id>.terms.txt`
  // term lists. Metrics are unavailable without it.
  std::optional<std::filesystem::path> reference_dir;
  std::vector<std::string> cors_allow;
  // Whisper-style transcription endpoint for `asr_fetch`. When empty, a
  // `<audio stem>.txt` file next to the audio is used instead.
  std::string asr_endpoint;
  std::string asr_model = "whisper-1";

  // Throws kConfig unless the directories exist and the port is valid.
  void Validate() const;
};

struct AppConfig {
  ProviderConfig provider;
  ServiceConfig service;
};

// INI-style key/value file with [provider] and [service] sections. Relative
// paths are resolved against `base_dir`. Throws kConfig.
AppConfig ParseConfig(std::string_view text,
                      const std::filesystem::path& base_dir = {});
AppConfig LoadConfig(const std::filesystem::path& path);

}  // namespace medtx

#endif  // MEDTX_CONFIG_H_
