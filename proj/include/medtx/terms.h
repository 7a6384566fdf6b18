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


#ifndef MEDTX_TERMS_H_
#define MEDTX_TERMS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace medtx {

// Curated key terms scored by Kmter. Terms may span up to five words and
// are unique after normalization.
class TermList {
 public:
  static constexpr std::size_t kMaxWordsPerTerm = 5;

  // Throws kInvalidArgument on an empty, overlong or duplicate term.
  TermList(std::string name, std::vector<std::string> terms);

  // One term per line; blank lines and lines starting with '#' are skipped.
  static TermList Parse(std::string name, std::string_view text);
  static TermList Load(const std::string& path);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<std::vector<std::string>>& normalized() const {
    return normalized_;
  }
  std::size_t size() const { return terms_.size(); }

 private:
  std::string name_;
  std::vector<std::string> terms_;
  std::vector<std::vector<std::string>> normalized_;
};

struct TermVerdict {
  std::string term;
  bool correct = false;
};

struct KmterResult {
  std::vector<TermVerdict> verdicts;
  std::size_t incorrect = 0;

  std::size_t total() const { return verdicts.size(); }
  double rate() const {
    return static_cast<double>(incorrect) / static_cast<double>(total());
  }
};

// A term counts as correct when its normalized words occur as a contiguous
// run anywhere in the hypothesis. Throws kInvalidArgument for an empty list.
KmterResult Kmter(const TermList& terms,
                  std::span<const std::string> hypothesis);

}  // namespace medtx

#endif  // MEDTX_TERMS_H_
