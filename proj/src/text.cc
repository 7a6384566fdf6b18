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


#include "medtx/text.h"

#include <array>
#include <cctype>

namespace medtx {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiPunct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

// Typographic quotes, dashes and the ellipsis, as UTF-8.
constexpr std::array<std::string_view, 7> kWidePunct = {
    "“", "”", "‘", "’", "–", "—", "…"};

std::size_t WidePunctPrefix(std::string_view s) {
  for (std::string_view p : kWidePunct) {
    if (s.substr(0, p.size()) == p) return p.size();
  }
  return 0;
}

std::size_t WidePunctSuffix(std::string_view s) {
  for (std::string_view p : kWidePunct) {
    if (s.size() >= p.size() && s.substr(s.size() - p.size()) == p) {
      return p.size();
    }
  }
  return 0;
}

struct Normalized {
  std::string surface;
  Span span;  // relative to the raw piece
};

Normalized NormalizeWithSpan(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end) {
    if (IsSpace(raw[begin]) || IsAsciiPunct(raw[begin])) {
      ++begin;
    } else if (std::size_t n = WidePunctPrefix(raw.substr(begin, end - begin));
               n > 0) {
      begin += n;
    } else {
      break;
    }
  }
  const std::size_t stripped_from = end;
  while (end > begin) {
    const char c = raw[end - 1];
    if (IsSpace(c) || (IsAsciiPunct(c) && c != '%')) {
      --end;
    } else if (std::size_t n = WidePunctSuffix(raw.substr(begin, end - begin));
               n > 0) {
      end -= n;
    } else {
      break;
    }
  }
  if (begin == end) return {};

  if (end < stripped_from && raw[end] == '.' &&
      IsAbbreviation(raw.substr(begin, end - begin + 1))) {
    ++end;
  }
  std::string surface(raw.substr(begin, end - begin));
  for (char& c : surface) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return {std::move(surface), {begin, end}};
}

// Start of the whitespace-delimited word that ends at `pos` (inclusive).
std::size_t WordStart(std::string_view text, std::size_t pos) {
  std::size_t start = pos;
  while (start > 0 && !IsSpace(text[start - 1])) --start;
  return start;
}

bool IsCloser(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

}  // namespace

bool IsAbbreviation(std::string_view word) {
  // Letter-period alternation with at least two groups: "p.o.", "e.g.".
  std::size_t start = 0;
  while (start < word.size() && IsAsciiPunct(word[start]) &&
         word[start] != '.') {
    ++start;
  }
  word.remove_prefix(start);
  if (word.size() < 4 || word.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < word.size(); i += 2) {
    if (!std::isalpha(static_cast<unsigned char>(word[i])) ||
        word[i + 1] != '.') {
      return false;
    }
  }
  return true;
}

std::string NormalizeToken(std::string_view raw) {
  return NormalizeWithSpan(raw).surface;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !IsSpace(text[pos])) ++pos;
    if (start == pos) break;
    Normalized n = NormalizeWithSpan(text.substr(start, pos - start));
    if (n.surface.empty()) continue;
    tokens.push_back(
        {std::move(n.surface), {start + n.span.begin, start + n.span.end}});
  }
  return tokens;
}

std::vector<std::string> TokenSurfaces(std::string_view text) {
  std::vector<std::string> out;
  for (Token& t : Tokenize(text)) out.push_back(std::move(t.surface));
  return out;
}

std::vector<Sentence> SegmentSentences(std::string_view text) {
  std::vector<Sentence> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (end > begin && IsSpace(text[end - 1])) --end;
    if (end == begin) return;
    Sentence s;
    s.index = sentences.size();
    s.text = std::string(text.substr(begin, end - begin));
    s.span = {begin, end};
    s.tokens = Tokenize(s.text);
    for (Token& t : s.tokens) {
      t.source_span.begin += begin;
      t.source_span.end += begin;
    }
    sentences.push_back(std::move(s));
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    if (pos == text.size()) break;
    const std::size_t begin = pos;
    std::size_t end = text.size();
    for (; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (c == '\n') {
        end = pos;
        break;
      }
      if (c != '.' && c != '?' && c != '!') continue;
      std::size_t after = pos + 1;
      while (after < text.size() && IsCloser(text[after])) ++after;
      if (after < text.size() && !IsSpace(text[after])) continue;
      if (c == '.' &&
          IsAbbreviation(text.substr(WordStart(text, pos),
                                     pos + 1 - WordStart(text, pos)))) {
        continue;
      }
      end = after;
      pos = after;
      break;
    }
    emit(begin, end);
  }
  return sentences;
}

std::string Reconstruct(std::string_view source,
                        const std::vector<Sentence>& sentences) {
  std::string out;
  out.reserve(source.size());
  std::size_t cursor = 0;
  for (const Sentence& s : sentences) {
    out.append(source.substr(cursor, s.span.begin - cursor));
    out.append(s.text);
    cursor = s.span.end;
  }
  out.append(source.substr(cursor));
  return out;
}

}  // namespace medtx
