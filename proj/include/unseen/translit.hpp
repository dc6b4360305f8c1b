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

#ifndef UNSEEN_TRANSLIT_HPP_
#define UNSEEN_TRANSLIT_HPP_

// Context-aware, longest-match grapheme rewriting.
//
// A rule rewrites a sequence of graphemes (lhs) to a replacement string
// (rhs), optionally only when the original text immediately before/after the
// match equals a given grapheme sequence. Transliteration is one left to
// right pass: at each position the applicable rule with the longest lhs is
// applied (file order breaks ties) and the scan resumes after the match.
// Graphemes that no rule matches are copied through.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "unseen/script.hpp"

namespace unseen::translit {

struct Rule {
  std::string lhs;
  std::string rhs;  // empty for deletion
  std::optional<std::string> left_context;
  std::optional<std::string> right_context;
  std::size_t line = 0;  // source line, 0 if built in code

  bool operator==(const Rule&) const = default;
};

struct RuleSet {
  std::string name;
  std::vector<ScriptClass> source_scripts;
  ScriptClass target_script = ScriptClass::kLatin;
  std::string target_language_note;
  std::vector<Rule> rules;
};

// Parses the line-oriented rule file format:
//
//   # comment
//   @name <id>
//   @source <script>[,<script>]
//   @target <script>
//   @note <free text>              (optional)
//   LHS<TAB>RHS[<TAB>LEFTCTX<TAB>RIGHTCTX]
//
// `∅` as RHS deletes the match; `∅` or an empty field as a context means no
// context. Directives must precede the first rule. Input must be NFC without
// trailing whitespace on any line.
//
// Throws EncodingError, ParseError (with line number) or FormatError when a
// required directive is missing.
RuleSet parse_ruleset(std::string_view text);

RuleSet load_ruleset_file(const std::filesystem::path& path);

enum class IssueKind {
  kDuplicateKey,  // two rules share (lhs, left_context, right_context)
  kIdempotence,   // a grapheme of some rhs occurs in some lhs
  kUncovered,     // an lhs grapheme has no context-free single-grapheme rule
};

std::string_view to_string(IssueKind kind);

struct Issue {
  IssueKind kind;
  std::size_t rule;  // index into RuleSet::rules
  std::optional<std::size_t> other_rule;
  std::string grapheme;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
};

// Checks the conditions under which transliteration is idempotent. With no
// rhs grapheme in any lhs, and every lhs grapheme rewritten unconditionally
// when it stands alone, the output of a pass never contains a grapheme that
// starts a rule, so a second pass copies it through.
ValidationReport validate_ruleset(const RuleSet& rules);

// A validated ruleset compiled for matching. Immutable and safe to share
// between threads.
class Transliterator {
 public:
  // Throws ContractError if validate_ruleset reports any issue.
  explicit Transliterator(RuleSet rules);

  std::string operator()(std::string_view text) const;

  const RuleSet& ruleset() const { return rules_; }

 private:
  struct CompiledRule {
    std::vector<std::string> lhs;
    std::vector<std::string> left;
    std::vector<std::string> right;
    std::string rhs;
  };

  RuleSet rules_;
  // Candidates keyed by first lhs grapheme, longest lhs first, then file
  // order.
  std::unordered_map<std::string, std::vector<CompiledRule>> by_first_;
};

// Convenience forms; each validates `rules` on every call.
std::string transliterate(std::string_view text, const RuleSet& rules);
std::vector<std::string> transliterate_tokens(
    std::span<const std::string> tokens, const RuleSet& rules);

std::vector<std::string> transliterate_tokens(
    std::span<const std::string> tokens, const Transliterator& transliterator);

// uyghur_latin, sorani_latin, cyrillic_latin, georgian_latin.
std::vector<std::string> builtin_ruleset_names();

// Throws LookupError for an unknown name.
const RuleSet& builtin_ruleset(std::string_view name);

// A built-in name, or else a path to a rule file.
RuleSet resolve_ruleset(std::string_view name_or_path);

}  // namespace unseen::translit

#endif  // UNSEEN_TRANSLIT_HPP_
