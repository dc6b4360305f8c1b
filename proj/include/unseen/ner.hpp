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

#ifndef UNSEEN_NER_HPP_
#define UNSEEN_NER_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unseen::translit {
class Transliterator;
}

namespace unseen::corpus {

// Tokens with IOB2 labels: "O", "B-TYPE" or "I-TYPE".
struct NerSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> labels;

  bool operator==(const NerSentence&) const = default;
};

// A labelled entity covering tokens [first, last].
struct EntitySpan {
  std::size_t first = 0;
  std::size_t last = 0;
  std::string type;

  auto operator<=>(const EntitySpan&) const = default;
};

enum class Iob2Mode {
  kStrict,  // an I-X without a B-X/I-X predecessor is an error
  kRepair,  // such an I-X becomes B-X
};

struct NerOptions {
  Iob2Mode mode = Iob2Mode::kStrict;
  // Drop a WikiAnn-style "xx:" language prefix from every token.
  bool strip_language_prefix = false;
};

bool is_iob2_label(std::string_view label);

// Index of the first I-X whose predecessor is neither B-X nor I-X.
std::optional<std::size_t> first_iob2_violation(
    std::span<const std::string> labels);

// Rewrites dangling I-X labels to B-X in place.
void repair_iob2(std::vector<std::string>& labels);

// Spans of a strictly valid label sequence, in order.
std::vector<EntitySpan> extract_spans(std::span<const std::string> labels);

// token<TAB>label lines, blank lines between sentences. Throws
// EncodingError, ParseError (line number) for a malformed line or label, and
// ValidationError (1-based sentence index) for IOB2 violations in strict
// mode.
std::vector<NerSentence> parse_ner(std::istream& in,
                                   const NerOptions& options = {});
std::vector<NerSentence> parse_ner(std::string_view text,
                                   const NerOptions& options = {});

// Throws ContractError for mismatched lengths, bad labels or fields holding
// tabs or newlines.
void write_ner(std::ostream& out, std::span<const NerSentence> sentences);
std::string write_ner(std::span<const NerSentence> sentences);

std::vector<NerSentence> transliterate_ner(
    std::span<const NerSentence> sentences,
    const translit::Transliterator& transliterator, unsigned jobs = 1);

}  // namespace unseen::corpus

#endif  // UNSEEN_NER_HPP_
