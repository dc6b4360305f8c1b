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

#ifndef UNSEEN_SCRIPT_HPP_
#define UNSEEN_SCRIPT_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unseen {

// Coarse script label of a grapheme. Common covers digits, punctuation,
// symbols, whitespace and marks shared across scripts. The enumerator order
// is also the tie-break order used when a token mixes scripts.
enum class ScriptClass { kLatin, kCyrillic, kArabic, kGeorgian, kCommon, kOther };

inline constexpr std::array<ScriptClass, 6> kAllScriptClasses = {
    ScriptClass::kLatin,    ScriptClass::kCyrillic, ScriptClass::kArabic,
    ScriptClass::kGeorgian, ScriptClass::kCommon,   ScriptClass::kOther};

// "Latin", "Cyrillic", ...
std::string_view to_string(ScriptClass script);

// Case-insensitive inverse of to_string.
std::optional<ScriptClass> parse_script_class(std::string_view name);

namespace script {

// NFC-normalizes `text` and splits it into extended grapheme clusters.
// Throws EncodingError on malformed UTF-8.
std::vector<std::string> segment_graphemes(std::string_view text);

// Total: anything outside the four tracked scripts that is a letter or mark
// is Other; non-letters are Common.
ScriptClass classify_script(std::string_view grapheme);

struct ScriptDistribution {
  std::array<std::size_t, kAllScriptClasses.size()> counts{};
  std::size_t total = 0;

  std::size_t count(ScriptClass script) const {
    return counts[static_cast<std::size_t>(script)];
  }
  // count / total, or 0 for an empty distribution.
  double share(ScriptClass script) const;
};

// Script of a single vocabulary entry: the majority class among its
// non-Common graphemes, ties going to the earlier ScriptClass. An entry with
// no such grapheme is Common. `marker` is stripped once from the front.
ScriptClass token_script(std::string_view token, std::string_view marker = {});

ScriptDistribution script_distribution(std::span<const std::string> tokens,
                                       std::string_view marker = {});

// One token per line; empty lines are skipped.
std::vector<std::string> read_vocabulary(std::istream& in);

// class<TAB>count<TAB>share rows in ScriptClass order, then a total row.
void write_distribution_tsv(std::ostream& out,
                            const ScriptDistribution& distribution);

}  // namespace script
}  // namespace unseen

#endif  // UNSEEN_SCRIPT_HPP_
