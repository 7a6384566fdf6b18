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


#include "medtx/alignment.h"

#include <algorithm>
#include <cstdint>

#include "medtx/error.h"

namespace medtx {

Alignment Align(std::span<const std::string> reference,
                std::span<const std::string> hypothesis) {
  const std::size_t n = reference.size();
  const std::size_t m = hypothesis.size();
  const std::size_t width = m + 1;
  std::vector<std::uint32_t> cost((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return cost[i * width + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t diag =
          at(i - 1, j - 1) + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  Alignment result;
  result.reference_length = n;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = reference[i - 1] == hypothesis[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0 : 1)) {
        result.ops.push_back(
            {same ? EditKind::kMatch : EditKind::kSubstitute, i - 1, j - 1});
        same ? ++result.matches : ++result.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      result.ops.push_back({EditKind::kDelete, i - 1, EditOp::kNone});
      ++result.deletions;
      --i;
    } else {
      result.ops.push_back({EditKind::kInsert, EditOp::kNone, j - 1});
      ++result.insertions;
      --j;
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

Alignment Align(std::span<const Token> reference,
                std::span<const Token> hypothesis) {
  std::vector<std::string> ref;
  std::vector<std::string> hyp;
  ref.reserve(reference.size());
  hyp.reserve(hypothesis.size());
  for (const Token& t : reference) ref.push_back(t.surface);
  for (const Token& t : hypothesis) hyp.push_back(t.surface);
  return Align(ref, hyp);
}

std::size_t EditDistance(std::span<const std::string> reference,
                         std::span<const std::string> hypothesis) {
  if (reference.size() < hypothesis.size()) std::swap(reference, hypothesis);
  std::vector<std::size_t> row(hypothesis.size() + 1);
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= reference.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j < row.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({diag + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1),
                         up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row.back();
}

double WordErrorRate(const Alignment& alignment) {
  if (alignment.reference_length == 0) {
    throw Error(ErrorCode::kEmptyReference,
                "reference transcript has no words");
  }
  return static_cast<double>(alignment.errors()) /
         static_cast<double>(alignment.reference_length);
}

}  // namespace medtx
