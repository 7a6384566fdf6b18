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


#include "medtx/report.h"

#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "medtx/error.h"
#include "test_util.h"

namespace medtx {
namespace {

using ::medtx::testing::DataPath;
using ::medtx::testing::ReadData;

MetricsRow Row(std::string rec, Method m, std::uint64_t s, std::uint64_t d,
               std::uint64_t i, std::uint64_t n,
               std::optional<Fraction> kmter = std::nullopt) {
  MetricsRow row;
  row.recording_id = std::move(rec);
  row.method = m;
  row.substitutions = s;
  row.deletions = d;
  row.insertions = i;
  row.reference_length = n;
  row.kmter = kmter;
  return row;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(ReportTest, RecordingOneCells) {
  const auto report = MetricsReport::Build(
      {Row("rec1", Method::kInitialAsr, 200, 30, 21, 500, Fraction{12, 27})});
  const std::string table = report.ToTable();
  const auto lines = Lines(table);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_NE(lines[3].find("50.2"), std::string::npos) << table;
  EXPECT_NE(lines[3].find("44.4"), std::string::npos) << table;
  EXPECT_EQ(report.ToCsv(),
            "recording,method,wer,kmter,s,d,i,n\n"
            "rec1,initial_asr,0.502000,0.444444,200,30,21,500\n");
}

TEST(ReportTest, EmptyInputRejected) {
  EXPECT_EQ(CodeOf([] { MetricsReport::Build({}); }),
            ErrorCode::kInvalidArgument);
}

TEST(ReportTest, DuplicateRowRejected) {
  EXPECT_EQ(CodeOf([] {
              MetricsReport::Build({Row("r", Method::kOneSet, 1, 0, 0, 4),
                                    Row("r", Method::kOneSet, 2, 0, 0, 4)});
            }),
            ErrorCode::kDuplicateRow);
}

TEST(ReportTest, FiveRecordingsByFourMethodsLayout) {
  std::vector<MetricsRow> rows;
  for (int r = 5; r >= 1; --r) {
    for (Method m : kReportMethodOrder) {
      rows.push_back(Row("recording" + std::to_string(r), m,
                         static_cast<std::uint64_t>(r), 1, 0, 50,
                         Fraction{static_cast<std::uint64_t>(r), 27}));
    }
  }
  const auto report = MetricsReport::Build(rows);
  EXPECT_EQ(report.recordings(),
            (std::vector<std::string>{"recording5", "recording4", "recording3",
                                      "recording2", "recording1"}));
  const auto lines = Lines(report.ToTable());
  ASSERT_EQ(lines.size(), 3u + 5u);
  const std::regex number(R"((^|\s)\d+\.\d(\s|$))");
  for (std::size_t k = 3; k < lines.size(); ++k) {
    const auto begin =
        std::sregex_iterator(lines[k].begin(), lines[k].end(), number);
    std::size_t count = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) ++count;
    EXPECT_EQ(count, 8u) << lines[k];
  }
  // Column order follows the methods, left to right.
  const std::string& header = lines[0];
  EXPECT_LT(header.find("Initial ASR"), header.find("One Set"));
  EXPECT_LT(header.find("One Set"), header.find("Sentence by Sentence"));
  EXPECT_LT(header.find("Sentence by Sentence"), header.find("Manual+LLM"));
  EXPECT_EQ(Lines(report.ToCsv()).size(), 21u);
}

TEST(ReportTest, MissingCellsRenderAsDash) {
  const auto table =
      MetricsReport::Build({Row("r", Method::kOneSet, 1, 0, 0, 4)}).ToTable();
  EXPECT_NE(Lines(table)[3].find("25.0"), std::string::npos);
  EXPECT_NE(Lines(table)[3].find("-"), std::string::npos);
}

TEST(ReportTest, CsvRoundTripProperty) {
  std::mt19937 rng(3);
  const std::vector<std::string> names = {"rec1", "a,b", "quote\"d", "x y",
                                          "r-2"};
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<MetricsRow> rows;
    for (const auto& name : names) {
      for (Method m : kReportMethodOrder) {
        if (rng() % 2) continue;
        const std::uint64_t n = 1 + rng() % 2000;
        std::optional<Fraction> kmter;
        if (rng() % 3) {
          const std::uint64_t total = 1 + rng() % kMaxCsvTermCount;
          kmter = Fraction{rng() % (total + 1), total};
        }
        rows.push_back(Row(name, m, rng() % 500, rng() % 500, rng() % 500, n,
                           kmter));
      }
    }
    if (rows.empty()) continue;
    const auto report = MetricsReport::Build(rows);
    const auto parsed = ParseMetricsCsv(report.ToCsv());
    ASSERT_EQ(parsed, report.rows());
    ASSERT_EQ(MetricsReport::Build(parsed).ToCsv(), report.ToCsv());
    for (const MetricsRow& r : parsed) {
      // WER is exactly (s+d+i)/n on every row.
      ASSERT_EQ(r.wer(), (Fraction{r.substitutions + r.deletions + r.insertions,
                                   r.reference_length}));
    }
  }
}

TEST(ReportTest, ParseRejectsInconsistentWer) {
  EXPECT_EQ(CodeOf([] {
              ParseMetricsCsv(
                  "recording,method,wer,kmter,s,d,i,n\nr,one_set,0.9,,1,0,0,4\n");
            }),
            ErrorCode::kCorruptRecord);
  EXPECT_EQ(CodeOf([] { ParseMetricsCsv("bad,header\n"); }),
            ErrorCode::kCorruptRecord);
  EXPECT_EQ(CodeOf([] { ParseMetricsCsv(""); }), ErrorCode::kCorruptRecord);
}

TEST(ReportTest, CsvEscapeAndSplit) {
  EXPECT_EQ(CsvEscape("plain"), "plain");
  EXPECT_EQ(CsvEscape("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvEscape("q\"x"), "\"q\"\"x\"");
  EXPECT_EQ(SplitCsvLine("\"a,b\",\"q\"\"x\",,z"),
            (std::vector<std::string>{"a,b", "q\"x", "", "z"}));
}

TEST(ScoreTest, RecordingOneFixture) {
  const TermList terms =
      TermList::Load(DataPath("recording1_terms.txt").string());
  const MetricsRow row =
      Score("recording1", Method::kInitialAsr, ReadData("recording1_reference.txt"),
            ReadData("recording1_asr.txt"), &terms);
  EXPECT_EQ(row.reference_length, 264u);
  EXPECT_NEAR(row.wer().value(), 0.502, 0.05);
  ASSERT_TRUE(row.kmter.has_value());
  EXPECT_EQ(*row.kmter, (Fraction{10, 29}));
}

TEST(ScoreTest, EmptyReferenceRejected) {
  EXPECT_EQ(CodeOf([] { Score("r", Method::kInitialAsr, " , ", "a"); }),
            ErrorCode::kEmptyReference);
}

}  // namespace
}  // namespace medtx
