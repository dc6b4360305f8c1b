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

#ifndef UNSEEN_CONLLU_HPP_
#define UNSEEN_CONLLU_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unseen::translit {
class Transliterator;
}

namespace unseen::corpus {

struct ConlluToken {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  std::string feats;
  int head = 0;
  std::string deprel;
  std::string deps;
  std::string misc;

  bool operator==(const ConlluToken&) const = default;
};

// A multiword token line "first-last". Columns other than FORM, FEATS and
// MISC must be "_".
struct MultiwordToken {
  int first = 0;
  int last = 0;
  std::string form;
  std::string feats = "_";
  std::string misc = "_";

  bool operator==(const MultiwordToken&) const = default;
};

// An enhanced-graph empty node "major.minor", kept verbatim and ignored by
// evaluation. `fields` holds all ten columns.
struct EmptyNode {
  int major = 0;
  int minor = 0;
  std::vector<std::string> fields;

  bool operator==(const EmptyNode&) const = default;
};

struct ConlluSentence {
  std::vector<std::string> comments;  // full lines, including the '#'
  std::vector<ConlluToken> tokens;    // ids 1..n
  std::vector<MultiwordToken> multiword_tokens;
  std::vector<EmptyNode> empty_nodes;

  bool operator==(const ConlluSentence&) const = default;
};

struct ConlluOptions {
  // Also require exactly one root per sentence, with head 0 iff the deprel is
  // root (subtypes allowed).
  bool strict = false;
};

// Throws EncodingError, ParseError (column count, malformed id or head) or
// StructureError (non-contiguous ids, head out of range, bad multiword
// range, root violations in strict mode). Errors carry 1-based line numbers.
std::vector<ConlluSentence> parse_conllu(std::istream& in,
                                         const ConlluOptions& options = {});
std::vector<ConlluSentence> parse_conllu(std::string_view text,
                                         const ConlluOptions& options = {});

// Throws ContractError naming the first violated sentence invariant.
void check_sentence(const ConlluSentence& sentence);

// Canonical form: '\n' line endings, each sentence followed by one blank
// line. Multiword tokens precede their first word; empty node k.m follows
// word k. Throws ContractError for an invalid sentence.
void write_conllu(std::ostream& out, std::span<const ConlluSentence> sentences);
std::string write_conllu(std::span<const ConlluSentence> sentences);

struct ConlluTranslitOptions {
  bool lemmas = true;
  unsigned jobs = 1;  // sentences transformed concurrently
};

// Rewrites FORM (and LEMMA, unless disabled) of words, multiword tokens and
// empty nodes. Everything else is copied unchanged.
std::vector<ConlluSentence> transliterate_conllu(
    std::span<const ConlluSentence> sentences,
    const translit::Transliterator& transliterator,
    const ConlluTranslitOptions& options = {});

}  // namespace unseen::corpus

#endif  // UNSEEN_CONLLU_HPP_
