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

#include "unseen/script.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <unicode/uchar.h>
#include <unicode/uscript.h>

#include "unseen/unicode.hpp"

namespace unseen {

std::string_view to_string(ScriptClass script) {
  switch (script) {
    case ScriptClass::kLatin: return "Latin";
    case ScriptClass::kCyrillic: return "Cyrillic";
    case ScriptClass::kArabic: return "Arabic";
    case ScriptClass::kGeorgian: return "Georgian";
    case ScriptClass::kCommon: return "Common";
    case ScriptClass::kOther: return "Other";
  }
  return "Other";
}

std::optional<ScriptClass> parse_script_class(std::string_view name) {
  for (ScriptClass script : kAllScriptClasses) {
    std::string_view candidate = to_string(script);
    if (candidate.size() == name.size() &&
        std::equal(name.begin(), name.end(), candidate.begin(),
                   [](char a, char b) {
                     return std::tolower(static_cast<unsigned char>(a)) ==
                            std::tolower(static_cast<unsigned char>(b));
                   })) {
      return script;
    }
  }
  return std::nullopt;
}

namespace script {

std::vector<std::string> segment_graphemes(std::string_view text) {
  return unicode::grapheme_clusters(unicode::to_nfc(text));
}

ScriptClass classify_script(std::string_view grapheme) {
  if (grapheme.empty()) return ScriptClass::kCommon;
  const auto c = static_cast<UChar32>(unicode::first_code_point(grapheme));

  const uint32_t mask = U_GET_GC_MASK(c);
  if ((mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_NL_MASK)) == 0) {
    return ScriptClass::kCommon;
  }
  UErrorCode status = U_ZERO_ERROR;
  const UScriptCode code = uscript_getScript(c, &status);
  if (U_FAILURE(status)) return ScriptClass::kOther;
  switch (code) {
    case USCRIPT_LATIN: return ScriptClass::kLatin;
    case USCRIPT_CYRILLIC: return ScriptClass::kCyrillic;
    case USCRIPT_ARABIC: return ScriptClass::kArabic;
    case USCRIPT_GEORGIAN: return ScriptClass::kGeorgian;
    case USCRIPT_COMMON:
    case USCRIPT_INHERITED: return ScriptClass::kCommon;
    default: return ScriptClass::kOther;
  }
}

double ScriptDistribution::share(ScriptClass script) const {
  if (total == 0) return 0.0;
  return static_cast<double>(count(script)) / static_cast<double>(total);
}

ScriptClass token_script(std::string_view token, std::string_view marker) {
  if (!marker.empty() && token.starts_with(marker)) {
    token.remove_prefix(marker.size());
  }
  std::array<std::size_t, kAllScriptClasses.size()> votes{};
  for (const std::string& g : segment_graphemes(token)) {
    ++votes[static_cast<std::size_t>(classify_script(g))];
  }
  votes[static_cast<std::size_t>(ScriptClass::kCommon)] = 0;
  // max_element keeps the first maximum, which is the tie-break order.
  const auto best = std::max_element(votes.begin(), votes.end());
  if (*best == 0) return ScriptClass::kCommon;
  return static_cast<ScriptClass>(best - votes.begin());
}

ScriptDistribution script_distribution(std::span<const std::string> tokens,
                                       std::string_view marker) {
  ScriptDistribution distribution;
  for (const std::string& token : tokens) {
    ++distribution.counts[static_cast<std::size_t>(token_script(token, marker))];
  }
  distribution.total = tokens.size();
  return distribution;
}

std::vector<std::string> read_vocabulary(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) tokens.push_back(std::move(line));
  }
  return tokens;
}

void write_distribution_tsv(std::ostream& out,
                            const ScriptDistribution& distribution) {
  out << "class\tcount\tshare\n";
  for (ScriptClass script : kAllScriptClasses) {
    out << fmt::format("{}\t{}\t{:.6f}\n", to_string(script),
                       distribution.count(script), distribution.share(script));
  }
  out << fmt::format("total\t{}\t{:.6f}\n", distribution.total,
                     distribution.total == 0 ? 0.0 : 1.0);
}

}  // namespace script
}  // namespace unseen
