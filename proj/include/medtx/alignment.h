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


#ifndef MEDTX_ALIGNMENT_H_
#define MEDTX_ALIGNMENT_H_

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "medtx/text.h"

namespace medtx {

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert };

struct EditOp {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  EditKind kind = EditKind::kMatch;
  std::size_t ref_index = kNone;  // kNone for insertions
  std::size_t hyp_index = kNone;  // kNone for deletions

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct Alignment {
  std::vector<EditOp> ops;
  std::size_t matches = 0;
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t reference_length = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
};

// Minimum edit script under unit costs. Among equal-cost scripts the
// backtrace prefers match/substitute, then delete, then insert, so the
// result is fully deterministic.
Alignment Align(std::span<const std::string> reference,
                std::span<const std::string> hypothesis);
Alignment Align(std::span<const Token> reference,
                std::span<const Token> hypothesis);

// Edit distance only, in O(min(n, m)) memory.
std::size_t EditDistance(std::span<const std::string> reference,
                         std::span<const std::string> hypothesis);

// (S + D + I) / N. Throws ErrorCode::kEmptyReference when N is zero.
double WordErrorRate(const Alignment& alignment);

}  // namespace medtx

#endif  // MEDTX_ALIGNMENT_H_
