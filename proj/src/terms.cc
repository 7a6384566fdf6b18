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


#include "medtx/terms.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "medtx/error.h"
#include "medtx/text.h"

namespace medtx {

TermList::TermList(std::string name, std::vector<std::string> terms)
    : name_(std::move(name)), terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "term list '" + name_ + "' is empty");
  }
  std::set<std::vector<std::string>> seen;
  for (const std::string& term : terms_) {
    std::vector<std::string> words = TokenSurfaces(term);
    if (words.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "term list '" + name_ + "' contains an empty term");
    }
    if (words.size() > kMaxWordsPerTerm) {
      throw Error(ErrorCode::kInvalidArgument,
                  "term '" + term + "' has more than 5 words");
    }
    if (!seen.insert(words).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate term '" + term + "' in list '" + name_ + "'");
    }
    normalized_.push_back(std::move(words));
  }
}

TermList TermList::Parse(std::string name, std::string_view text) {
  std::vector<std::string> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    terms.push_back(line.substr(first, last - first + 1));
  }
  return TermList(std::move(name), std::move(terms));
}

TermList TermList::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read term list " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(path, buf.str());
}

KmterResult Kmter(const TermList& terms,
                  std::span<const std::string> hypothesis) {
  if (terms.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "term list is empty");
  }
  KmterResult result;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::vector<std::string>& words = terms.normalized()[k];
    const bool found =
        std::search(hypothesis.begin(), hypothesis.end(), words.begin(),
                    words.end()) != hypothesis.end();
    result.verdicts.push_back({terms.terms()[k], found});
    if (!found) ++result.incorrect;
  }
  return result;
}

}  // namespace medtx
