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

#include "unseen/raw_text.hpp"

#include <istream>
#include <ostream>
#include <unordered_set>

#include "parallel.h"
#include "unseen/error.hpp"
#include "unseen/translit.hpp"
#include "unseen/unicode.hpp"

namespace unseen::corpus {

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!unicode::is_valid_utf8(line)) {
      throw EncodingError("line " + std::to_string(lines.size() + 1) +
                          ": invalid UTF-8");
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

void write_lines(std::ostream& out, std::span<const std::string> lines) {
  for (const std::string& line : lines) out << line << '\n';
}

std::vector<std::string> dedup_lines(std::span<const std::string> lines) {
  std::vector<std::string> kept;
  std::unordered_set<std::string> seen;
  for (const std::string& line : lines) {
    const std::string_view trimmed = unicode::trim(line);
    if (trimmed.empty()) continue;
    if (seen.insert(unicode::to_nfc(trimmed)).second) kept.push_back(line);
  }
  return kept;
}

std::vector<std::string> transliterate_lines(
    std::span<const std::string> lines,
    const translit::Transliterator& transliterator, unsigned jobs) {
  std::vector<std::string> out(lines.size());
  internal::parallel_for(lines.size(), jobs, [&](std::size_t i) {
    out[i] = transliterator(lines[i]);
  });
  return out;
}

}  // namespace unseen::corpus
