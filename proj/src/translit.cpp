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

#include "unseen/translit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "builtin_rules.h"
#include "unseen/error.hpp"
#include "unseen/unicode.hpp"

namespace unseen::translit {
namespace {

constexpr std::string_view kEmptyMarker = "∅";

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

bool has_trailing_whitespace(std::string_view line) {
  if (line.empty()) return false;
  const std::string_view trimmed = unicode::trim(line);
  return trimmed.empty() ||
         trimmed.data() + trimmed.size() != line.data() + line.size();
}

std::optional<std::string> context_field(std::string_view field) {
  if (field.empty() || field == kEmptyMarker) return std::nullopt;
  return std::string(field);
}

std::string describe(const RuleSet& rules, std::size_t index) {
  const Rule& rule = rules.rules[index];
  std::string out = "rule " + std::to_string(index + 1);
  if (rule.line != 0) out += " (line " + std::to_string(rule.line) + ")";
  return out;
}

}  // namespace

RuleSet parse_ruleset(std::string_view text) {
  unicode::require_valid_utf8(text);

  RuleSet rules;
  bool have_name = false;
  bool have_source = false;
  bool have_target = false;
  bool have_note = false;

  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t number = i + 1;
    if (line.empty()) continue;
    if (has_trailing_whitespace(line)) {
      throw ParseError("trailing whitespace", number);
    }
    if (!unicode::is_nfc(line)) throw ParseError("line is not NFC", number);
    if (line.front() == '#') continue;

    if (line.front() == '@') {
      if (!rules.rules.empty()) {
        throw ParseError("directive after the first rule", number);
      }
      const std::size_t space = line.find(' ');
      const std::string_view key = line.substr(0, space);
      const std::string_view value =
          space == std::string_view::npos ? std::string_view{}
                                          : line.substr(space + 1);
      if (value.empty()) {
        throw ParseError("directive " + std::string(key) + " has no value",
                         number);
      }
      auto once = [&](bool& seen) {
        if (seen) {
          throw ParseError("duplicate directive " + std::string(key), number);
        }
        seen = true;
      };
      auto script = [&](std::string_view name) {
        std::optional<ScriptClass> parsed = parse_script_class(name);
        if (!parsed) {
          throw ParseError("unknown script '" + std::string(name) + "'",
                           number);
        }
        return *parsed;
      };
      if (key == "@name") {
        once(have_name);
        rules.name = value;
      } else if (key == "@source") {
        once(have_source);
        for (std::string_view name : split(value, ',')) {
          rules.source_scripts.push_back(script(unicode::trim(name)));
        }
      } else if (key == "@target") {
        once(have_target);
        rules.target_script = script(value);
      } else if (key == "@note") {
        once(have_note);
        rules.target_language_note = value;
      } else {
        throw ParseError("unknown directive " + std::string(key), number);
      }
      continue;
    }

    const std::vector<std::string_view> fields = split(line, '\t');
    if (fields.size() != 2 && fields.size() != 4) {
      throw ParseError("expected 2 or 4 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       number);
    }
    if (fields[0].empty()) throw ParseError("empty left-hand side", number);
    if (fields[1].empty()) {
      throw ParseError("empty right-hand side (use ∅ for deletion)", number);
    }
    Rule rule;
    rule.lhs = fields[0];
    rule.rhs = fields[1] == kEmptyMarker ? std::string() : std::string(fields[1]);
    if (fields.size() == 4) {
      rule.left_context = context_field(fields[2]);
      rule.right_context = context_field(fields[3]);
    }
    rule.line = number;
    rules.rules.push_back(std::move(rule));
  }

  if (!have_name) throw FormatError("rule file has no @name directive");
  if (!have_source) throw FormatError("rule file has no @source directive");
  if (!have_target) throw FormatError("rule file has no @target directive");
  return rules;
}

RuleSet load_ruleset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open rule file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ruleset(buffer.str());
}

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::kDuplicateKey: return "duplicate-key";
    case IssueKind::kIdempotence: return "idempotence";
    case IssueKind::kUncovered: return "uncovered";
  }
  return "unknown";
}

ValidationReport validate_ruleset(const RuleSet& rules) {
  ValidationReport report;
  using Key = std::tuple<std::string, std::optional<std::string>,
                         std::optional<std::string>>;
  std::map<Key, std::size_t> first_with_key;
  // lhs grapheme -> first rule containing it
  std::map<std::string, std::size_t> lhs_graphemes;
  std::set<std::string> covered;

  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    const Rule& rule = rules.rules[i];
    Key key{rule.lhs, rule.left_context, rule.right_context};
    auto [it, inserted] = first_with_key.emplace(std::move(key), i);
    if (!inserted) {
      report.issues.push_back(
          {IssueKind::kDuplicateKey, i, it->second, rule.lhs,
           describe(rules, i) + " repeats the key of " +
               describe(rules, it->second)});
    }
    const std::vector<std::string> lhs = script::segment_graphemes(rule.lhs);
    for (const std::string& g : lhs) lhs_graphemes.emplace(g, i);
    if (lhs.size() == 1 && !rule.left_context && !rule.right_context) {
      covered.insert(lhs.front());
    }
  }

  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    std::set<std::string> reported;
    for (const std::string& g : script::segment_graphemes(rules.rules[i].rhs)) {
      auto it = lhs_graphemes.find(g);
      if (it == lhs_graphemes.end() || !reported.insert(g).second) continue;
      report.issues.push_back(
          {IssueKind::kIdempotence, i, it->second, g,
           "output '" + g + "' of " + describe(rules, i) +
               " is matched by " + describe(rules, it->second)});
    }
  }

  std::vector<std::pair<std::size_t, std::string>> uncovered;
  for (const auto& [g, index] : lhs_graphemes) {
    if (!covered.contains(g)) uncovered.emplace_back(index, g);
  }
  std::sort(uncovered.begin(), uncovered.end());
  for (const auto& [index, g] : uncovered) {
    report.issues.push_back(
        {IssueKind::kUncovered, index, std::nullopt, g,
         "'" + g + "' in " + describe(rules, index) +
             " has no context-free rule of its own"});
  }
  return report;
}

Transliterator::Transliterator(RuleSet rules) : rules_(std::move(rules)) {
  const ValidationReport report = validate_ruleset(rules_);
  if (!report.ok()) {
    std::string message = "ruleset '" + rules_.name +
                          "' is not valid: " + report.issues.front().message;
    if (report.issues.size() > 1) {
      message += " (and " + std::to_string(report.issues.size() - 1) +
                 " more issues)";
    }
    throw ContractError(message);
  }

  for (const Rule& rule : rules_.rules) {
    CompiledRule compiled{
        script::segment_graphemes(rule.lhs),
        rule.left_context ? script::segment_graphemes(*rule.left_context)
                          : std::vector<std::string>{},
        rule.right_context ? script::segment_graphemes(*rule.right_context)
                           : std::vector<std::string>{},
        rule.rhs};
    std::string first = compiled.lhs.front();
    by_first_[first].push_back(std::move(compiled));
  }
  for (auto& [first, candidates] : by_first_) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const CompiledRule& a, const CompiledRule& b) {
                       return a.lhs.size() > b.lhs.size();
                     });
  }
}

std::string Transliterator::operator()(std::string_view text) const {
  const std::vector<std::string> g = script::segment_graphemes(text);
  const std::size_t n = g.size();

  auto matches_at = [&](const std::vector<std::string>& seq, std::size_t at) {
    return at + seq.size() <= n &&
           std::equal(seq.begin(), seq.end(), g.begin() + at);
  };

  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < n) {
    const CompiledRule* applied = nullptr;
    if (auto it = by_first_.find(g[i]); it != by_first_.end()) {
      for (const CompiledRule& rule : it->second) {
        if (!matches_at(rule.lhs, i)) continue;
        if (!rule.left.empty() &&
            (rule.left.size() > i ||
             !matches_at(rule.left, i - rule.left.size()))) {
          continue;
        }
        if (!rule.right.empty() && !matches_at(rule.right, i + rule.lhs.size())) {
          continue;
        }
        applied = &rule;
        break;
      }
    }
    if (applied != nullptr) {
      out += applied->rhs;
      i += applied->lhs.size();
    } else {
      out += g[i];
      ++i;
    }
  }
  return unicode::to_nfc(out);
}

std::string transliterate(std::string_view text, const RuleSet& rules) {
  return Transliterator(rules)(text);
}

std::vector<std::string> transliterate_tokens(
    std::span<const std::string> tokens, const Transliterator& transliterator) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& token : tokens) out.push_back(transliterator(token));
  return out;
}

std::vector<std::string> transliterate_tokens(
    std::span<const std::string> tokens, const RuleSet& rules) {
  return transliterate_tokens(tokens, Transliterator(rules));
}

namespace {

const std::map<std::string, RuleSet, std::less<>>& builtin_rulesets() {
  static const std::map<std::string, RuleSet, std::less<>> rulesets = [] {
    std::map<std::string, RuleSet, std::less<>> parsed;
    for (const internal::BuiltinRuleText& entry : internal::builtin_rule_texts()) {
      parsed.emplace(std::string(entry.name), parse_ruleset(entry.text));
    }
    return parsed;
  }();
  return rulesets;
}

}  // namespace

std::vector<std::string> builtin_ruleset_names() {
  std::vector<std::string> names;
  for (const internal::BuiltinRuleText& entry : internal::builtin_rule_texts()) {
    names.emplace_back(entry.name);
  }
  return names;
}

const RuleSet& builtin_ruleset(std::string_view name) {
  const auto& rulesets = builtin_rulesets();
  auto it = rulesets.find(name);
  if (it == rulesets.end()) {
    throw LookupError("no built-in ruleset named '" + std::string(name) + "'");
  }
  return it->second;
}

RuleSet resolve_ruleset(std::string_view name_or_path) {
  const auto& rulesets = builtin_rulesets();
  if (auto it = rulesets.find(name_or_path); it != rulesets.end()) {
    return it->second;
  }
  const std::filesystem::path path(name_or_path);
  if (!std::filesystem::exists(path)) {
    throw LookupError("'" + std::string(name_or_path) +
                      "' is neither a built-in ruleset nor a rule file");
  }
  return load_ruleset_file(path);
}

}  // namespace unseen::translit
