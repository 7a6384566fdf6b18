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


// Runs the medtx executable as a subprocess.

#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "test_util.h"

namespace {

using ::medtx::testing::DataPath;
using ::medtx::testing::ReadData;
using ::medtx::testing::ReadFile;
using ::medtx::testing::RunCommand;
using ::medtx::testing::ShellQuote;
using ::medtx::testing::TempDir;
using ::medtx::testing::WriteFile;

std::string Data(const std::string& name) {
  return ShellQuote(DataPath(name).string());
}

std::pair<int, std::string> Cli(const std::string& args,
                                 const std::string& redirect = " 2>/dev/null") {
  return RunCommand(std::string(MEDTX_CLI_PATH) + " " + args + redirect);
}

TEST(CliTest, ScoreFixtureCsv) {
  const auto [status, out] =
      Cli("score --ref " + Data("recording1_reference.txt") + " --hyp " +
          Data("recording1_asr.txt") + " --terms " + Data("recording1_terms.txt"));
  ASSERT_EQ(status, 0);
  EXPECT_EQ(out,
            "recording,method,wer,kmter,s,d,i,n\n"
            "recording1_asr,initial_asr,0.537879,0.344828,76,7,59,264\n");
}

TEST(CliTest, ScoreIdenticalIsZero) {
  const auto [status, out] = Cli("score --ref " + Data("recording1_asr.txt") +
                                 " --hyp " + Data("recording1_asr.txt") +
                                 " --recording x");
  ASSERT_EQ(status, 0);
  EXPECT_NE(out.find("\nx,initial_asr,0.000000,,0,0,0,"), std::string::npos);
}

TEST(CliTest, ScoreTable) {
  const auto [status, out] =
      Cli("score --format table --ref " + Data("recording1_reference.txt") +
          " --hyp " + Data("recording1_asr.txt") + " --recording rec1");
  ASSERT_EQ(status, 0);
  EXPECT_NE(out.find("rec1"), std::string::npos);
  EXPECT_NE(out.find("53.8"), std::string::npos);
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Cli("").first, 1);
  EXPECT_EQ(Cli("score --ref a").first, 1);
  EXPECT_EQ(Cli("score --ref a --hyp b --format xml").first, 1);
  EXPECT_EQ(Cli("frobnicate").first, 1);
  EXPECT_EQ(Cli("correct --mode sentence --in " + Data("recording1_asr.txt")).first,
            1);
  const auto [status, err] = Cli("bogus", " 2>&1 >/dev/null");
  EXPECT_TRUE(err.starts_with("error: code=usage message=\"")) << err;
}

TEST(CliTest, IoErrorsExitTwo) {
  const auto [status, err] = Cli(
      "score --ref /nonexistent/ref.txt --hyp " + Data("recording1_asr.txt"),
      " 2>&1 >/dev/null");
  EXPECT_EQ(status, 2);
  EXPECT_TRUE(err.starts_with("error: code=io_error message=\"")) << err;
  // The message is a JSON string.
  const auto msg = nlohmann::json::parse(err.substr(err.find("message=") + 8));
  EXPECT_NE(msg.get<std::string>().find("/nonexistent/ref.txt"), std::string::npos);

  TempDir dir;
  WriteFile(dir.path() / "empty.txt", "  ");
  EXPECT_EQ(Cli("score --ref " + ShellQuote((dir.path() / "empty.txt").string()) +
                " --hyp " + Data("recording1_asr.txt"))
                .first,
            2);
}

TEST(CliTest, CorrectSentenceModeWithBundledMock) {
  TempDir dir;
  const auto in = dir.path() / "rec1.txt";
  WriteFile(in, ReadData("recording1_asr.txt"));
  const auto [status, out] = Cli("correct --mode sentence --mock paper_examples --in " +
                                 ShellQuote(in.string()));
  ASSERT_EQ(status, 0);
  const auto suggestions =
      nlohmann::json::parse(ReadFile(dir.path() / "rec1.suggestions.json"));
  bool found = false;
  for (std::size_t k = 0; k < suggestions.size(); ++k) {
    const auto& s = suggestions[k];
    EXPECT_EQ(s["sentence_index"], k);
    if (s["original_text"].get<std::string>().find("Xeralta") != std::string::npos) {
      found = true;
      EXPECT_EQ(s["corrected_text"],
                "Xarelto has been resumed, and the patient is back on "
                "amiodarone and will be on PO (per os) daily.");
      EXPECT_EQ(s["rationale"].size(), 3u);
    }
  }
  EXPECT_TRUE(found);
  const std::string corrected = ReadFile(dir.path() / "rec1.sentence.txt");
  EXPECT_NE(corrected.find("Xarelto has been resumed"), std::string::npos);
  EXPECT_NE(corrected.find("no bleeding or ecchymosis"), std::string::npos);
}

TEST(CliTest, CorrectOneSetIdentityMock) {
  TempDir dir;
  const auto in = dir.path() / "rec1.txt";
  WriteFile(in, ReadData("recording1_asr.txt"));
  const auto out = dir.path() / "fixed.txt";
  ASSERT_EQ(Cli("correct --mode one-set --mock " + Data("paper_examples.mock.jsonl") +
                " --in " + ShellQuote(in.string()) + " --out " +
                ShellQuote(out.string()))
                .first,
            0);
  EXPECT_EQ(ReadFile(out), ReadData("recording1_asr.txt"));
}

TEST(CliTest, ProviderFailureWritesNothing) {
  TempDir dir;
  const auto in = dir.path() / "rec1.txt";
  WriteFile(in, "Skin normal.");
  WriteFile(dir.path() / "p.ini",
            "[provider]\nendpoint = http://127.0.0.1:9/v1/chat/completions\n"
            "model = m\nmax_retries = 1\nbackoff_ms = 1\ntimeout_seconds = 1\n");
  const auto [status, err] =
      Cli("correct --mode one-set --provider " +
              ShellQuote((dir.path() / "p.ini").string()) + " --in " +
              ShellQuote(in.string()),
          " 2>&1 >/dev/null");
  EXPECT_EQ(status, 2);
  EXPECT_TRUE(err.starts_with("error: code=retries_exhausted")) << err;
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir.path())) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 2u);  // only the input and the config
}

TEST(CliTest, CorrectUnknownMockName) {
  TempDir dir;
  WriteFile(dir.path() / "a.txt", "A.");
  EXPECT_EQ(Cli("correct --mode one-set --mock no_such_mock --in " +
                ShellQuote((dir.path() / "a.txt").string()))
                .first,
            2);
}

TEST(CliTest, ReportFromRows) {
  TempDir dir;
  const auto [s1, csv] = Cli("score --ref " + Data("recording1_reference.txt") +
                             " --hyp " + Data("recording1_asr.txt") +
                             " --recording recording1");
  ASSERT_EQ(s1, 0);
  WriteFile(dir.path() / "rows.csv", csv);
  const auto rows = ShellQuote((dir.path() / "rows.csv").string());
  const auto [s2, table] = Cli("report --rows " + rows);
  ASSERT_EQ(s2, 0);
  EXPECT_NE(table.find("Initial ASR"), std::string::npos);
  EXPECT_NE(table.find("53.8"), std::string::npos);
  const auto [s3, again] = Cli("report --format csv --rows " + rows);
  ASSERT_EQ(s3, 0);
  EXPECT_EQ(again, csv);  // byte-identical round trip

  WriteFile(dir.path() / "bad.csv", "nope\n");
  EXPECT_EQ(Cli("report --rows " + ShellQuote((dir.path() / "bad.csv").string()))
                .first,
            2);
}

TEST(CliTest, VersionFlag) {
  const auto [status, out] = Cli("--version");
  EXPECT_EQ(status, 0);
  EXPECT_EQ(out, "0.1.0\n");
}

TEST(CliTest, ServeAnswersHealthAndStopsOnSigterm) {
  TempDir dir;
  std::filesystem::create_directories(dir.path() / "data");
  std::filesystem::create_directories(dir.path() / "audio");
  WriteFile(dir.path() / "medtx.ini",
            "[provider]\nmock_file = " + DataPath("paper_examples.mock.jsonl").string() +
                "\n[service]\nport = 0\ndata_dir = data\naudio_dir = audio\n");
  const std::string log = (dir.path() / "serve.log").string();
  const std::string script =
      std::string(MEDTX_CLI_PATH) + " serve --config " +
      ShellQuote((dir.path() / "medtx.ini").string()) + " 2>" + ShellQuote(log) +
      " & pid=$!; for i in $(seq 50); do grep -q listening " + ShellQuote(log) +
      " && break; sleep 0.1; done; port=$(sed -n 's/.*:\\([0-9]*\\)$/\\1/p' " +
      ShellQuote(log) +
      "); curl -s http://127.0.0.1:$port/health; kill -TERM $pid; wait $pid; "
      "echo \" exit=$?\"";
  const auto [status, out] = RunCommand("sh -c " + ShellQuote(script));
  EXPECT_EQ(status, 0);
  EXPECT_EQ(out, "{\"status\":\"ok\",\"version\":\"0.1.0\"} exit=0\n")
      << ReadFile(log);
}

}  // namespace
