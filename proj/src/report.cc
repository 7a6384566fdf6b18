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

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "medtx/error.h"
#include "medtx/text.h"

namespace medtx {
namespace {

constexpr std::size_t kCellWidth = 10;
constexpr std::size_t kGroupWidth = 2 * kCellWidth + 1;

std::string Fixed6(const Fraction& f) { return fmt::format("{:.6f}", f.value()); }

std::string Percent1(const Fraction& f) {
  return fmt::format("{:.1f}", f.value() * 100.0);
}

std::uint64_t ParseCount(const std::string& field, std::string_view what) {
  std::uint64_t value = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw Error(ErrorCode::kCorruptRecord,
                fmt::format("bad {} count '{}'", what, field));
  }
  return value;
}

Fraction RecoverFraction(const std::string& printed) {
  double v = 0;
  try {
    v = std::stod(printed);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kCorruptRecord, "bad kmter value '" + printed + "'");
  }
  for (std::uint64_t den = 1; den <= kMaxCsvTermCount; ++den) {
    const auto num = static_cast<std::uint64_t>(v * static_cast<double>(den) + 0.5);
    if (num > den) continue;
    if (Fixed6({num, den}) == printed) return {num, den};
  }
  throw Error(ErrorCode::kCorruptRecord,
              "kmter value '" + printed + "' is not a term-count ratio");
}

}  // namespace

MetricsRow MakeMetricsRow(std::string recording_id, Method method,
                          const Alignment& alignment,
                          const KmterResult* kmter) {
  if (alignment.reference_length == 0) {
    throw Error(ErrorCode::kEmptyReference,
                "reference transcript has no words");
  }
  MetricsRow row;
  row.recording_id = std::move(recording_id);
  row.method = method;
  row.substitutions = alignment.substitutions;
  row.deletions = alignment.deletions;
  row.insertions = alignment.insertions;
  row.reference_length = alignment.reference_length;
  if (kmter != nullptr) row.kmter = Fraction{kmter->incorrect, kmter->total()};
  return row;
}

MetricsRow Score(std::string recording_id, Method method,
                 std::string_view reference, std::string_view hypothesis,
                 const TermList* terms) {
  const std::vector<std::string> ref = TokenSurfaces(reference);
  const std::vector<std::string> hyp = TokenSurfaces(hypothesis);
  const Alignment alignment = Align(ref, hyp);
  if (terms == nullptr) {
    return MakeMetricsRow(std::move(recording_id), method, alignment);
  }
  const KmterResult kmter = Kmter(*terms, hyp);
  return MakeMetricsRow(std::move(recording_id), method, alignment, &kmter);
}

MetricsReport MetricsReport::Build(std::vector<MetricsRow> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "report needs at least one row");
  }
  std::vector<std::string> order;
  std::set<std::pair<std::string, Method>> seen;
  for (const MetricsRow& row : rows) {
    if (!seen.emplace(row.recording_id, row.method).second) {
      throw Error(ErrorCode::kDuplicateRow,
                  fmt::format("duplicate row for ({}, {})", row.recording_id,
                              MethodName(row.method)));
    }
    if (std::find(order.begin(), order.end(), row.recording_id) == order.end()) {
      order.push_back(row.recording_id);
    }
  }
  auto rank = [&](const MetricsRow& r) {
    return std::pair(std::find(order.begin(), order.end(), r.recording_id) -
                         order.begin(),
                     static_cast<int>(r.method));
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const MetricsRow& a, const MetricsRow& b) {
                     return rank(a) < rank(b);
                   });
  MetricsReport report;
  report.rows_ = std::move(rows);
  return report;
}

std::vector<std::string> MetricsReport::recordings() const {
  std::vector<std::string> out;
  for (const MetricsRow& row : rows_) {
    if (out.empty() || out.back() != row.recording_id) {
      out.push_back(row.recording_id);
    }
  }
  return out;
}

std::string MetricsReport::ToCsv() const {
  std::string out(kCsvHeader);
  out += '\n';
  for (const MetricsRow& row : rows_) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", CsvEscape(row.recording_id),
                       MethodName(row.method), Fixed6(row.wer()),
                       row.kmter ? Fixed6(*row.kmter) : std::string(),
                       row.substitutions, row.deletions, row.insertions,
                       row.reference_length);
  }
  return out;
}

std::string MetricsReport::ToTable() const {
  const std::vector<std::string> recs = recordings();
  std::size_t first = std::string_view("Recording").size();
  for (const std::string& r : recs) first = std::max(first, r.size());

  std::string out = fmt::format("{:<{}}", "", first);
  for (Method m : kReportMethodOrder) {
    out += fmt::format(" | {:<{}}", MethodTitle(m), kGroupWidth);
  }
  out += '\n';
  out += fmt::format("{:<{}}", "Recording", first);
  for (std::size_t k = 0; k < kReportMethodOrder.size(); ++k) {
    out += fmt::format(" | {:>{}} {:>{}}", "WER", kCellWidth, "KMTER",
                       kCellWidth);
  }
  out += '\n';
  out += std::string(first, '-');
  for (std::size_t k = 0; k < kReportMethodOrder.size(); ++k) {
    out += "-+-" + std::string(kGroupWidth, '-');
  }
  out += '\n';

  std::map<std::pair<std::string, Method>, const MetricsRow*> cells;
  for (const MetricsRow& row : rows_) cells[{row.recording_id, row.method}] = &row;
  for (const std::string& r : recs) {
    out += fmt::format("{:<{}}", r, first);
    for (Method m : kReportMethodOrder) {
      auto it = cells.find({r, m});
      std::string wer = "-";
      std::string kmter = "-";
      if (it != cells.end()) {
        wer = Percent1(it->second->wer());
        if (it->second->kmter) kmter = Percent1(*it->second->kmter);
      }
      out += fmt::format(" | {:>{}} {:>{}}", wer, kCellWidth, kmter, kCellWidth);
    }
    out += '\n';
  }
  return out;
}

std::vector<MetricsRow> ParseMetricsCsv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kCorruptRecord, "metrics CSV is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw Error(ErrorCode::kCorruptRecord,
                "unexpected metrics CSV header '" + line + "'");
  }
  std::vector<MetricsRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 8) {
      throw Error(ErrorCode::kCorruptRecord,
                  fmt::format("line {}: expected 8 fields, got {}", line_no,
                              f.size()));
    }
    MetricsRow row;
    row.recording_id = f[0];
    try {
      row.method = ParseMethod(f[1]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kCorruptRecord,
                  fmt::format("line {}: {}", line_no, e.what()));
    }
    row.substitutions = ParseCount(f[4], "substitution");
    row.deletions = ParseCount(f[5], "deletion");
    row.insertions = ParseCount(f[6], "insertion");
    row.reference_length = ParseCount(f[7], "reference");
    if (row.reference_length == 0 || Fixed6(row.wer()) != f[2]) {
      throw Error(ErrorCode::kCorruptRecord,
                  fmt::format("line {}: wer '{}' disagrees with counts",
                              line_no, f[2]));
    }
    if (!f[3].empty()) row.kmter = RecoverFraction(f[3]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace medtx
