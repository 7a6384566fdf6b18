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


#ifndef MEDTX_REPORT_H_
#define MEDTX_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medtx/alignment.h"
#include "medtx/terms.h"
#include "medtx/transcript.h"

namespace medtx {

// Exact non-negative rational. Equality compares values, so 2/4 == 1/2.
struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

// One (recording, method) cell pair of the comparison table. WER is always
// derived from the counts; KMTER is absent when no term list was scored.
struct MetricsRow {
  std::string recording_id;
  Method method = Method::kInitialAsr;
  std::uint64_t substitutions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t reference_length = 0;
  std::optional<Fraction> kmter;

  Fraction wer() const {
    return {substitutions + deletions + insertions, reference_length};
  }
  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

MetricsRow MakeMetricsRow(std::string recording_id, Method method,
                          const Alignment& alignment,
                          const KmterResult* kmter = nullptr);

// Scores hypothesis text against reference text, and against `terms` when
// given. Throws kEmptyReference when the reference has no words.
MetricsRow Score(std::string recording_id, Method method,
                 std::string_view reference, std::string_view hypothesis,
                 const TermList* terms = nullptr);

inline constexpr std::string_view kCsvHeader = "recording,method,wer,kmter,s,d,i,n";

// Largest KMTER denominator recoverable from the six-decimal CSV form.
inline constexpr std::uint64_t kMaxCsvTermCount = 1000;

class MetricsReport {
 public:
  // Groups by recording in first-seen order, methods in table order.
  // Throws kInvalidArgument on empty input and kDuplicateRow when a
  // (recording, method) pair repeats.
  static MetricsReport Build(std::vector<MetricsRow> rows);

  const std::vector<MetricsRow>& rows() const { return rows_; }
  std::vector<std::string> recordings() const;

  // Header plus one line per row; fractions with six decimals.
  std::string ToCsv() const;

  // Fixed-width comparison table, percentages with one decimal.
  std::string ToTable() const;

 private:
  std::vector<MetricsRow> rows_;
};

// Inverse of MetricsReport::ToCsv. KMTER is recovered as the exact fraction
// with the smallest denominator (at most kMaxCsvTermCount) that rounds to
// the printed value. Throws kCorruptRecord on malformed input.
std::vector<MetricsRow> ParseMetricsCsv(std::string_view csv);

std::string CsvEscape(std::string_view field);
std::vector<std::string> SplitCsvLine(std::string_view line);

}  // namespace medtx

#endif  // MEDTX_REPORT_H_
