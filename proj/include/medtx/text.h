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


#ifndef MEDTX_TEXT_H_
#define MEDTX_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace medtx {

// Half-open byte range [begin, end) into a source string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;  // normalized, never empty, no whitespace
  Span source_span;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;  // trimmed; equals source.substr(span)
  Span span;
  std::vector<Token> tokens;  // spans are relative to the original source

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Lowercases and strips leading/trailing punctuation. Interior characters
// are kept, as are trailing percent signs and the final period of an
// abbreviation such as "p.o.". Returns an empty string when nothing but
// punctuation remains.
std::string NormalizeToken(std::string_view raw);

// Whitespace split followed by NormalizeToken; punctuation-only pieces are
// dropped.
std::vector<Token> Tokenize(std::string_view text);

// Surfaces only, for callers that do not need spans.
std::vector<std::string> TokenSurfaces(std::string_view text);

// Splits after ". ", "? ", "! " (any following whitespace) and at newlines.
// A period that closes an abbreviation ("p.o.") never ends a sentence.
// Whitespace between sentences belongs to no sentence.
std::vector<Sentence> SegmentSentences(std::string_view text);

// Rebuilds the source from sentences plus the whitespace gaps between them.
// `source` supplies the gaps; the sentence texts are taken from `sentences`.
std::string Reconstruct(std::string_view source,
                        const std::vector<Sentence>& sentences);

bool IsAbbreviation(std::string_view word);

}  // namespace medtx

#endif  // MEDTX_TEXT_H_
