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


#include "medtx/correction.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <optional>
#include <regex>
#include <thread>

#include "medtx/error.h"
#include "medtx/prompts.h"

namespace medtx {
namespace {

constexpr std::string_view kSpace = " \t\r\n";

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(kSpace) - first + 1);
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

bool IsExplanationMarker(std::string_view line) {
  static const std::regex kMarker(R"(^\s*\**\s*(explanation|explanations|reasoning)\b.*)",
                                  std::regex::icase);
  return std::regex_match(line.begin(), line.end(), kMarker);
}

struct Sections {
  std::string_view body;
  std::vector<std::string_view> explanation;  // lines after the marker
};

Sections SplitSections(std::string_view raw) {
  Sections s;
  const std::vector<std::string_view> lines = Lines(raw);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (!IsExplanationMarker(lines[k])) continue;
    const std::size_t offset = static_cast<std::size_t>(lines[k].data() - raw.data());
    s.body = raw.substr(0, offset);
    s.explanation.assign(lines.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                         lines.end());
    return s;
  }
  s.body = raw;
  return s;
}

// First non-empty span between straight or typographic double quotes.
std::optional<std::string_view> FirstQuoted(std::string_view text) {
  static constexpr std::string_view kOpen[] = {"\"", "“"};
  static constexpr std::string_view kClose[] = {"\"", "”"};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = std::string_view::npos;
    int which = -1;
    for (int q = 0; q < 2; ++q) {
      const auto at = text.find(kOpen[q], pos);
      if (at < best) {
        best = at;
        which = q;
      }
    }
    if (which < 0) return std::nullopt;
    const std::size_t begin = best + kOpen[which].size();
    const std::size_t end = text.find(kClose[which], begin);
    if (end == std::string_view::npos) return std::nullopt;
    if (std::string_view inner = Trim(text.substr(begin, end - begin));
        !inner.empty()) {
      return inner;
    }
    pos = end + kClose[which].size();
  }
  return std::nullopt;
}

std::vector<std::string> ParseRationale(
    const std::vector<std::string_view>& lines) {
  static const std::regex kItem(R"(^\s*\d+\s*[.)]\s*(.*)$)");
  std::vector<std::string> items;
  for (std::string_view line : lines) {
    std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_match(trimmed.begin(), trimmed.end(), m, kItem)) {
      items.emplace_back(Trim(std::string(m[1].first, m[1].second)));
    } else if (!items.empty()) {
      items.back() += ' ';
      items.back() += trimmed;
    }
  }
  return items;
}

}  // namespace

Suggestion ParseSuggestion(std::string_view raw, std::string_view original,
                           std::size_t sentence_index) {
  Suggestion s;
  s.sentence_index = sentence_index;
  s.original_text = std::string(original);
  s.provider_meta.raw_response = std::string(raw);

  const Sections sections = SplitSections(raw);
  std::string_view corrected;
  if (auto quoted = FirstQuoted(sections.body)) {
    corrected = *quoted;
  } else {
    for (std::string_view line : Lines(sections.body)) {
      if (!Trim(line).empty()) {
        corrected = Trim(line);
        break;
      }
    }
  }
  if (corrected.empty()) corrected = Trim(raw);
  if (corrected.empty()) corrected = Trim(original);
  if (corrected.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "empty response for an empty sentence");
  }
  s.corrected_text = std::string(corrected);
  s.rationale = ParseRationale(sections.explanation);
  return s;
}

std::string ParseDocumentResponse(std::string_view raw,
                                  std::string_view original) {
  std::string_view body = Trim(SplitSections(raw).body);
  for (auto [open, close] : {std::pair<std::string_view, std::string_view>{"\"", "\""},
                             {"“", "”"}}) {
    if (body.size() >= open.size() + close.size() &&
        body.substr(0, open.size()) == open &&
        body.substr(body.size() - close.size()) == close &&
        body.substr(open.size(), body.size() - open.size() - close.size())
                .find(close) == std::string_view::npos) {
      body = Trim(body.substr(open.size(),
                              body.size() - open.size() - close.size()));
      break;
    }
  }
  if (body.empty()) body = Trim(original);
  return std::string(body);
}

Suggestion IdentitySuggestion(const Sentence& sentence, std::string error) {
  Suggestion s;
  s.sentence_index = sentence.index;
  s.original_text = sentence.text;
  s.corrected_text = sentence.text;
  if (!error.empty()) s.provider_meta.error = std::move(error);
  return s;
}

Transcript CorrectOneSet(const Transcript& transcript,
                         const CompletionProvider& provider) {
  const std::string_view text = transcript.text;
  const std::string_view core = Trim(text);
  if (core.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "transcript is empty");
  }
  const Completion completion = provider.Complete(BuildOneSetPrompt(core));
  const std::size_t lead = static_cast<std::size_t>(core.data() - text.data());
  const std::size_t tail_at = lead + core.size();

  Transcript out;
  out.role = TranscriptRole::kCorrected;
  out.method = Method::kOneSet;
  out.text = std::string(text.substr(0, lead));
  out.text += ParseDocumentResponse(completion.text, core);
  out.text += text.substr(tail_at);
  return out;
}

Transcript CorrectOneSet(const Transcript& transcript,
                         const ProviderConfig& config) {
  return CorrectOneSet(transcript, *MakeProvider(config));
}

std::vector<Suggestion> CorrectSentences(const std::vector<Sentence>& sentences,
                                         const CompletionProvider& provider,
                                         int parallelism) {
  if (parallelism < 1) {
    throw Error(ErrorCode::kConfig, "parallelism must be at least 1");
  }
  if (sentences.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no sentences to correct");
  }
  std::vector<Suggestion> out(sentences.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < sentences.size(); k = next++) {
      const Sentence& sentence = sentences[k];
      try {
        Completion c = provider.Complete(BuildSentencePrompt(sentence.text));
        Suggestion s = ParseSuggestion(c.text, sentence.text, sentence.index);
        s.provider_meta = std::move(c.meta);
        s.provider_meta.raw_response = std::move(c.text);
        out[k] = std::move(s);
      } catch (const std::exception& e) {
        out[k] = IdentitySuggestion(sentence, e.what());
      }
    }
  };
  const std::size_t workers =
      std::min(sentences.size(), static_cast<std::size_t>(parallelism));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  return out;
}

std::vector<Suggestion> CorrectSentences(const std::vector<Sentence>& sentences,
                                         const ProviderConfig& config) {
  const auto provider = MakeProvider(config);
  return CorrectSentences(sentences, *provider, config.parallelism);
}

Transcript AcceptAll(const std::vector<Suggestion>& suggestions) {
  Transcript out;
  out.role = TranscriptRole::kCorrected;
  out.method = Method::kSentenceBySentence;
  for (const Suggestion& s : suggestions) {
    if (!out.text.empty()) out.text += ' ';
    out.text += s.corrected_text;
  }
  return out;
}

}  // namespace medtx
