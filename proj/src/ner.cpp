// Copyright 2026 The Unseen Authors.
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

#include "unseen/ner.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "parallel.h"
#include "unseen/error.hpp"
#include "unseen/translit.hpp"
#include "unseen/unicode.hpp"

namespace unseen::corpus {
namespace {

std::string_view entity_type(std::string_view label) {
  return label.size() > 2 ? label.substr(2) : std::string_view{};
}

// "en:Paris" -> "Paris". Only a lowercase ASCII code before the colon counts
// as a prefix, so tokens like ":" or "10:30" are left alone.
std::string_view strip_prefix(std::string_view token) {
  const std::size_t colon = token.find(':');
  if (colon == 0 || colon == std::string_view::npos ||
      colon + 1 == token.size()) {
    return token;
  }
  for (char c : token.substr(0, colon)) {
    if (!(c >= 'a' && c <= 'z') && c != '-' && c != '_') return token;
  }
  return token.substr(colon + 1);
}

}  // namespace

bool is_iob2_label(std::string_view label) {
  if (label == "O") return true;
  return label.size() > 2 && (label[0] == 'B' || label[0] == 'I') &&
         label[1] == '-' &&
         label.find_first_of("\t\n\r ") == std::string_view::npos;
}

std::optional<std::size_t> first_iob2_violation(
    std::span<const std::string> labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].starts_with("I-")) continue;
    if (i == 0 || labels[i - 1] == "O" ||
        entity_type(labels[i - 1]) != entity_type(labels[i])) {
      return i;
    }
  }
  return std::nullopt;
}

void repair_iob2(std::vector<std::string>& labels) {
  // Left to right: a repaired label becomes a valid predecessor for the
  // next one.
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].starts_with("I-") &&
        (i == 0 || labels[i - 1] == "O" ||
         entity_type(labels[i - 1]) != entity_type(labels[i]))) {
      labels[i][0] = 'B';
    }
  }
}

std::vector<EntitySpan> extract_spans(std::span<const std::string> labels) {
  std::vector<EntitySpan> spans;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].starts_with("B-")) continue;
    const std::string_view type = entity_type(labels[i]);
    std::size_t last = i;
    while (last + 1 < labels.size() && labels[last + 1].starts_with("I-") &&
           entity_type(labels[last + 1]) == type) {
      ++last;
    }
    spans.push_back({i, last, std::string(type)});
  }
  return spans;
}

std::vector<NerSentence> parse_ner(std::istream& in, const NerOptions& options) {
  std::vector<NerSentence> sentences;
  NerSentence current;
  std::string line;
  std::size_t number = 0;

  auto flush = [&] {
    if (current.tokens.empty()) return;
    if (auto bad = first_iob2_violation(current.labels)) {
      if (options.mode == Iob2Mode::kStrict) {
        throw ValidationError(
            "label " + current.labels[*bad] + " at token " +
                std::to_string(*bad + 1) + " does not continue an entity",
            sentences.size() + 1);
      }
      repair_iob2(current.labels);
    }
    sentences.push_back(std::move(current));
    current = NerSentence();
  };

  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!unicode::is_valid_utf8(line)) {
      throw EncodingError("line " + std::to_string(number) +
                          ": invalid UTF-8");
    }
    if (line.empty()) {
      flush();
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected token<TAB>label", number);
    }
    std::string_view token = std::string_view(line).substr(0, tab);
    const std::string_view label = std::string_view(line).substr(tab + 1);
    if (options.strip_language_prefix) token = strip_prefix(token);
    if (token.empty()) throw ParseError("empty token", number);
    if (!is_iob2_label(label)) {
      throw ParseError("'" + std::string(label) + "' is not an IOB2 label",
                       number);
    }
    current.tokens.emplace_back(token);
    current.labels.emplace_back(label);
  }
  flush();
  return sentences;
}

std::vector<NerSentence> parse_ner(std::string_view text,
                                   const NerOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_ner(in, options);
}

void write_ner(std::ostream& out, std::span<const NerSentence> sentences) {
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const NerSentence& sentence = sentences[s];
    const std::string where = "sentence " + std::to_string(s + 1) + ": ";
    if (sentence.tokens.size() != sentence.labels.size() ||
        sentence.tokens.empty()) {
      throw ContractError(where + "token and label counts differ or are zero");
    }
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const std::string& token = sentence.tokens[i];
      if (token.empty() || token.find_first_of("\t\n\r") != std::string::npos ||
          !is_iob2_label(sentence.labels[i])) {
        throw ContractError(where + "malformed token or label at " +
                            std::to_string(i + 1));
      }
      out << token << '\t' << sentence.labels[i] << '\n';
    }
    out << '\n';
  }
}

std::string write_ner(std::span<const NerSentence> sentences) {
  std::ostringstream out;
  write_ner(out, sentences);
  return out.str();
}

std::vector<NerSentence> transliterate_ner(
    std::span<const NerSentence> sentences,
    const translit::Transliterator& transliterator, unsigned jobs) {
  std::vector<NerSentence> out(sentences.begin(), sentences.end());
  internal::parallel_for(out.size(), jobs, [&](std::size_t i) {
    for (std::string& token : out[i].tokens) {
      std::string result = transliterator(token);
      if (!result.empty()) token = std::move(result);
    }
  });
  return out;
}

}  // namespace unseen::corpus
