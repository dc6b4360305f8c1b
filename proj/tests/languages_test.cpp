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

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>

#include "unseen/error.hpp"

namespace unseen::corpus {
namespace {

TEST(Languages, Sorani) {
  const LanguageRecord& r = lookup_language("ckb");
  EXPECT_EQ(r.script, ScriptClass::kArabic);
  EXPECT_EQ(r.family, "Indo-Iranian");
  EXPECT_EQ(r.sents, 380000);
  EXPECT_EQ(r.source, RawSource::kOscar);
}

TEST(Languages, Faroese) {
  const LanguageRecord& r = lookup_language("fao");
  EXPECT_EQ(r.script, ScriptClass::kLatin);
  EXPECT_EQ(r.sents, 297000);
  EXPECT_EQ(r.source, RawSource::kLeipzig);
}

TEST(Languages, UnknownCode) {
  EXPECT_THROW(lookup_language("zz"), LookupError);
}

TEST(Languages, TableShape) {
  const auto table = language_table();
  EXPECT_EQ(table.size(), 15u);
  std::set<std::string_view> codes;
  for (const LanguageRecord& r : table) {
    EXPECT_GT(r.sents, 0);
    codes.insert(r.iso);
  }
  EXPECT_EQ(codes.size(), table.size());
  EXPECT_EQ(lookup_language("olo").sents, 9400);
  EXPECT_EQ(lookup_language("xmf").script, ScriptClass::kGeorgian);
}

TEST(Languages, WriteTable) {
  std::ostringstream out;
  write_language_table(out, std::span(&lookup_language("ckb"), 1));
  EXPECT_EQ(out.str(),
            "iso\tname\tscript\tfamily\tsents\tsource\n"
            "ckb\tSorani\tArabic\tIndo-Iranian\t380000\tOSCAR\n");
}

}  // namespace
}  // namespace unseen::corpus
