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


// medtx command line: score transcripts, run LLM correction, render
// comparison reports and launch the review service. Links only the C API.
//
// Exit codes: 0 success, 1 usage error, 2 I/O, data or provider error.
// Failures print one "error: code=<name> message=<json string>" line on
// stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "medtx/medtx.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct Failure {
  int exit_code;
  std::string code;
  std::string message;
};

void Check(medtx_status status) {
  if (status != MEDTX_OK) {
    throw Failure{kExitFailure, medtx_status_name(status), medtx_last_error()};
  }
}

struct FreeString {
  void operator()(char* s) const { medtx_free(s); }
};
using OwnedString = std::unique_ptr<char, FreeString>;

struct ReportDeleter {
  void operator()(medtx_report* r) const { medtx_report_destroy(r); }
};
struct ProviderDeleter {
  void operator()(medtx_provider* p) const { medtx_provider_destroy(p); }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitFailure, "io_error", "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes through a temporary file so a failed run leaves no partial output.
void WriteFileAtomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out.flush()) {
      std::remove(tmp.c_str());
      throw Failure{kExitFailure, "io_error", "cannot write " + path};
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Failure{kExitFailure, "io_error", "cannot write " + path};
  }
}

std::string DataDir() {
  if (const char* env = std::getenv("MEDTX_DATA_DIR"); env && *env) return env;
  return MEDTX_DEFAULT_DATA_DIR;
}

// A mock argument is either a file or the name of a bundled mock such as
// "paper_examples".
std::string ResolveMock(const std::string& mock) {
  if (std::filesystem::is_regular_file(mock)) return mock;
  const std::filesystem::path bundled =
      std::filesystem::path(DataDir()) / (mock + ".mock.jsonl");
  if (std::filesystem::is_regular_file(bundled)) return bundled.string();
  throw Failure{kExitFailure, "io_error", "no mock file or bundled mock '" + mock + "'"};
}

std::string Stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int RunScore(const std::string& ref_path, const std::string& hyp_path,
             const std::string& terms_path, const std::string& format,
             std::string recording, const std::string& method_name) {
  const std::string ref = ReadFile(ref_path);
  const std::string hyp = ReadFile(hyp_path);
  std::optional<std::string> terms;
  if (!terms_path.empty()) terms = ReadFile(terms_path);
  if (recording.empty()) recording = Stem(hyp_path);

  medtx_method method = MEDTX_METHOD_INITIAL_ASR;
  if (method_name == "one_set") method = MEDTX_METHOD_ONE_SET;
  if (method_name == "sentence_by_sentence") method = MEDTX_METHOD_SENTENCE_BY_SENTENCE;
  if (method_name == "manual_llm") method = MEDTX_METHOD_MANUAL_LLM;

  medtx_metrics metrics{};
  Check(medtx_score(ref.c_str(), hyp.c_str(), terms ? terms->c_str() : nullptr,
                    &metrics));
  medtx_report* raw = nullptr;
  Check(medtx_report_create(&raw));
  std::unique_ptr<medtx_report, ReportDeleter> report(raw);
  Check(medtx_report_add(report.get(), recording.c_str(), method, &metrics));
  char* out = nullptr;
  Check(medtx_report_render(
      report.get(), format == "table" ? MEDTX_FORMAT_TABLE : MEDTX_FORMAT_CSV,
      &out));
  OwnedString text(out);
  std::cout << text.get();
  return 0;
}

int RunCorrect(const std::string& mode, const std::string& in_path,
               const std::string& provider_path, const std::string& mock,
               std::string out_path, std::string suggestions_path) {
  if (provider_path.empty() && mock.empty()) {
    throw Failure{kExitUsage, "usage", "--provider or --mock is required"};
  }
  const std::string text = ReadFile(in_path);
  medtx_provider* raw = nullptr;
  if (provider_path.empty()) {
    Check(medtx_provider_mock(ResolveMock(mock).c_str(), &raw));
  } else {
    const std::string resolved = mock.empty() ? std::string() : ResolveMock(mock);
    Check(medtx_provider_open(provider_path.c_str(),
                              mock.empty() ? nullptr : resolved.c_str(), &raw));
  }
  std::unique_ptr<medtx_provider, ProviderDeleter> provider(raw);

  const std::filesystem::path in(in_path);
  const std::string base = (in.parent_path() / in.stem()).string();
  if (out_path.empty()) {
    out_path = base + (mode == "one-set" ? ".one_set.txt" : ".sentence.txt");
  }
  if (mode == "one-set") {
    char* corrected = nullptr;
    Check(medtx_correct_one_set(provider.get(), text.c_str(), &corrected));
    OwnedString owned(corrected);
    WriteFileAtomic(out_path, owned.get());
    std::cerr << "wrote " << out_path << "\n";
    return 0;
  }
  if (suggestions_path.empty()) suggestions_path = base + ".suggestions.json";
  char* corrected = nullptr;
  char* suggestions = nullptr;
  Check(medtx_correct_sentences(provider.get(), text.c_str(), &corrected,
                                &suggestions));
  OwnedString owned_corrected(corrected);
  OwnedString owned_suggestions(suggestions);
  WriteFileAtomic(suggestions_path, owned_suggestions.get());
  WriteFileAtomic(out_path, std::string(owned_corrected.get()) + "\n");
  std::cerr << "wrote " << out_path << " and " << suggestions_path << "\n";
  return 0;
}

int RunReport(const std::string& rows_path, const std::string& format) {
  const std::string csv = ReadFile(rows_path);
  medtx_report* raw = nullptr;
  Check(medtx_report_parse_csv(csv.c_str(), &raw));
  std::unique_ptr<medtx_report, ReportDeleter> report(raw);
  char* out = nullptr;
  Check(medtx_report_render(
      report.get(), format == "csv" ? MEDTX_FORMAT_CSV : MEDTX_FORMAT_TABLE,
      &out));
  OwnedString text(out);
  std::cout << text.get();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Medical transcript scoring, LLM correction and review"};
  app.set_version_flag("--version", std::string(medtx_version()));
  app.require_subcommand(1);

  std::string ref, hyp, terms, format = "csv", recording, method = "initial_asr";
  CLI::App* score = app.add_subcommand("score", "WER (and KMTER) of a hypothesis");
  score->add_option("--ref", ref, "Reference transcript")->required();
  score->add_option("--hyp", hyp, "Hypothesis transcript")->required();
  score->add_option("--terms", terms, "Key-term list, one per line");
  score->add_option("--format", format)->check(CLI::IsMember({"csv", "table"}));
  score->add_option("--recording", recording, "Recording id (default: hyp file stem)");
  score->add_option("--method", method)
      ->check(CLI::IsMember(
          {"initial_asr", "one_set", "sentence_by_sentence", "manual_llm"}));

  std::string mode, in, provider, mock, out, suggestions;
  CLI::App* correct = app.add_subcommand("correct", "LLM correction of a transcript");
  correct->add_option("--mode", mode)->required()->check(
      CLI::IsMember({"one-set", "sentence"}));
  correct->add_option("--in", in, "ASR transcript")->required();
  correct->add_option("--provider", provider, "Config file with a [provider] section");
  correct->add_option("--mock", mock, "Mock lookup file or bundled mock name");
  correct->add_option("--out", out, "Corrected transcript path");
  correct->add_option("--suggestions", suggestions, "Suggestions JSON path (sentence mode)");

  std::string rows, report_format = "table";
  CLI::App* report = app.add_subcommand("report", "Render a comparison table");
  report->add_option("--rows", rows, "Metrics CSV")->required();
  report->add_option("--format", report_format)->check(CLI::IsMember({"csv", "table"}));

  std::string config;
  CLI::App* serve = app.add_subcommand("serve", "Run the review service");
  serve->add_option("--config", config)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: code=usage message=" << nlohmann::json(e.what()).dump()
              << "\n";
    return kExitUsage;
  }

  try {
    if (*score) return RunScore(ref, hyp, terms, format, recording, method);
    if (*correct) return RunCorrect(mode, in, provider, mock, out, suggestions);
    if (*report) return RunReport(rows, report_format);
    if (*serve) {
      Check(medtx_serve(config.c_str()));
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: code=" << f.code
              << " message=" << nlohmann::json(f.message).dump() << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}
