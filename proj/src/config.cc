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


#include "medtx/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "medtx/error.h"

namespace medtx {
namespace {

namespace pt = boost::property_tree;

const std::set<std::string, std::less<>> kProviderKeys = {
    "endpoint",    "model",      "api_key_env", "timeout_seconds",
    "max_retries", "parallelism", "backoff_ms", "temperature",
    "mock_file"};
const std::set<std::string, std::less<>> kServiceKeys = {
    "host",          "port",       "data_dir",     "audio_dir",
    "reference_dir", "cors_allow", "asr_endpoint", "asr_model"};

template <typename T>
T Get(const pt::ptree& section, const std::string& section_name,
      const char* key, T fallback) {
  if (section.count(key) == 0) return fallback;
  try {
    return section.get<T>(key);
  } catch (const pt::ptree_error&) {
    throw Error(ErrorCode::kConfig,
                fmt::format("[{}] {} has an invalid value", section_name, key));
  }
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& value) {
  const std::filesystem::path p(value);
  return p.is_relative() && !base.empty() ? base / p : p;
}

void CheckKeys(const pt::ptree& section, const std::string& name,
               const std::set<std::string, std::less<>>& allowed) {
  for (const auto& [key, child] : section) {
    if (!allowed.contains(key)) {
      throw Error(ErrorCode::kConfig,
                  fmt::format("unknown key '{}' in [{}]", key, name));
    }
  }
}

void CheckDir(const std::filesystem::path& dir, const char* what) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kConfig,
                fmt::format("{} '{}' is not a directory", what, dir.string()));
  }
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kConfig,
                fmt::format("{} '{}' is not readable", what, dir.string()));
  }
}

}  // namespace

void ServiceConfig::Validate() const {
  if (port < 0 || port > 65535) {
    throw Error(ErrorCode::kConfig, fmt::format("port {} out of range", port));
  }
  if (data_dir.empty()) throw Error(ErrorCode::kConfig, "data_dir is not set");
  if (audio_dir.empty()) throw Error(ErrorCode::kConfig, "audio_dir is not set");
  CheckDir(data_dir, "data_dir");
  CheckDir(audio_dir, "audio_dir");
  if (reference_dir) CheckDir(*reference_dir, "reference_dir");
}

AppConfig ParseConfig(std::string_view text,
                      const std::filesystem::path& base_dir) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::kConfig,
                fmt::format("config line {}: {}", e.line(), e.message()));
  }
  for (const auto& [name, section] : tree) {
    if (name != "provider" && name != "service") {
      throw Error(ErrorCode::kConfig,
                  fmt::format("unknown section or top-level key '{}'", name));
    }
  }

  AppConfig config;
  const pt::ptree provider = tree.get_child("provider", pt::ptree());
  CheckKeys(provider, "provider", kProviderKeys);
  ProviderConfig& p = config.provider;
  p.endpoint = Get<std::string>(provider, "provider", "endpoint", p.endpoint);
  p.model = Get<std::string>(provider, "provider", "model", p.model);
  p.api_key_env =
      Get<std::string>(provider, "provider", "api_key_env", p.api_key_env);
  p.timeout_seconds =
      Get<double>(provider, "provider", "timeout_seconds", p.timeout_seconds);
  p.max_retries = Get<int>(provider, "provider", "max_retries", p.max_retries);
  p.parallelism = Get<int>(provider, "provider", "parallelism", p.parallelism);
  p.initial_backoff_ms =
      Get<int>(provider, "provider", "backoff_ms", p.initial_backoff_ms);
  if (provider.count("temperature") > 0) {
    p.temperature = Get<double>(provider, "provider", "temperature", 0.0);
  }
  if (auto mock = provider.get_optional<std::string>("mock_file");
      mock && !mock->empty()) {
    p.mock_file = Resolve(base_dir, *mock).string();
  }

  const pt::ptree service = tree.get_child("service", pt::ptree());
  CheckKeys(service, "service", kServiceKeys);
  ServiceConfig& s = config.service;
  s.host = Get<std::string>(service, "service", "host", s.host);
  s.port = Get<int>(service, "service", "port", s.port);
  if (auto v = service.get_optional<std::string>("data_dir")) {
    s.data_dir = Resolve(base_dir, *v);
  }
  if (auto v = service.get_optional<std::string>("audio_dir")) {
    s.audio_dir = Resolve(base_dir, *v);
  }
  if (auto v = service.get_optional<std::string>("reference_dir");
      v && !v->empty()) {
    s.reference_dir = Resolve(base_dir, *v);
  }
  if (auto v = service.get_optional<std::string>("cors_allow")) {
    std::istringstream list(*v);
    std::string origin;
    while (std::getline(list, origin, ',')) {
      const auto first = origin.find_first_not_of(' ');
      if (first == std::string::npos) continue;
      s.cors_allow.push_back(
          origin.substr(first, origin.find_last_not_of(' ') - first + 1));
    }
  }
  s.asr_endpoint = Get<std::string>(service, "service", "asr_endpoint", "");
  s.asr_model = Get<std::string>(service, "service", "asr_model", s.asr_model);
  return config;
}

AppConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfig, "cannot read config " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str(), path.parent_path());
}

}  // namespace medtx
