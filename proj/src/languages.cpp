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

#include "unseen/languages.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <string>

#include "unseen/error.hpp"

namespace unseen::corpus {
namespace {

using enum RawSource;
constexpr ScriptClass kLatin = ScriptClass::kLatin;

constexpr std::array<LanguageRecord, 15> kLanguages = {{
    {"bm", "Bambara", kLatin, "Niger-Congo", 1'000, kOscar},
    {"wo", "Wolof", kLatin, "Niger-Congo", 10'000, kOscar},
    {"gsw", "Swiss German", kLatin, "West Germanic", 250'000, kOscar},
    {"pcm", "Naija", kLatin, "Pidgin (En)", 237'000, kOther},
    {"fao", "Faroese", kLatin, "North Germanic", 297'000, kLeipzig},
    {"mlt", "Maltese", kLatin, "Semitic", 50'000, kOscar},
    // Code-mixed with French.
    {"nrz", "Narabizi", kLatin, "Semitic", 87'000, kOther},
    {"ckb", "Sorani", ScriptClass::kArabic, "Indo-Iranian", 380'000, kOscar},
    {"ug", "Uyghur", ScriptClass::kArabic, "Turkic", 105'000, kOscar},
    {"sd", "Sindhi", ScriptClass::kArabic, "Indo-Aryan", 375'000, kOscar},
    {"xmf", "Mingrelian", ScriptClass::kGeorgian, "Kartvelian", 29'000, kWiki},
    {"bxu", "Buryat", ScriptClass::kCyrillic, "Mongolic", 7'000, kWiki},
    {"mhr", "Mari", ScriptClass::kCyrillic, "Uralic", 58'000, kWiki},
    {"myv", "Erzya", ScriptClass::kCyrillic, "Uralic", 20'000, kWiki},
    {"olo", "Livvi", kLatin, "Uralic", 9'400, kWiki},
}};

}  // namespace

std::string_view to_string(RawSource source) {
  switch (source) {
    case kOscar: return "OSCAR";
    case kWiki: return "Wiki";
    case kLeipzig: return "Leipzig";
    case kOther: return "Other";
  }
  return "Other";
}

std::span<const LanguageRecord> language_table() { return kLanguages; }

const LanguageRecord& lookup_language(std::string_view iso) {
  auto it = std::find_if(kLanguages.begin(), kLanguages.end(),
                         [&](const LanguageRecord& r) { return r.iso == iso; });
  if (it == kLanguages.end()) {
    throw LookupError("unknown language code '" + std::string(iso) + "'");
  }
  return *it;
}

void write_language_table(std::ostream& out,
                          std::span<const LanguageRecord> records) {
  out << "iso\tname\tscript\tfamily\tsents\tsource\n";
  for (const LanguageRecord& r : records) {
    out << r.iso << '\t' << r.name << '\t' << to_string(r.script) << '\t'
        << r.family << '\t' << r.sents << '\t' << to_string(r.source) << '\n';
  }
}

}  // namespace unseen::corpus
