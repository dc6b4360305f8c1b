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

#ifndef UNSEEN_LANGUAGES_HPP_
#define UNSEEN_LANGUAGES_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>

#include "unseen/script.hpp"

namespace unseen::corpus {

enum class RawSource { kOscar, kWiki, kLeipzig, kOther };

std::string_view to_string(RawSource source);

// An unseen language and the raw text available for adapting a model to it.
struct LanguageRecord {
  std::string_view iso;
  std::string_view name;
  ScriptClass script;
  std::string_view family;
  std::int64_t sents;  // raw sentences; rounded counts expanded (9.4k -> 9400)
  RawSource source;
};

// The fifteen languages with raw data, in registry order.
std::span<const LanguageRecord> language_table();

// Throws LookupError for a code not in the table.
const LanguageRecord& lookup_language(std::string_view iso);

// iso<TAB>name<TAB>script<TAB>family<TAB>sents<TAB>source, with a header.
void write_language_table(std::ostream& out,
                          std::span<const LanguageRecord> records);

}  // namespace unseen::corpus

#endif  // UNSEEN_LANGUAGES_HPP_
