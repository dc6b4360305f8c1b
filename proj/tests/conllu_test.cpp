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

#include "unseen/conllu.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "unseen/error.hpp"
#include "unseen/translit.hpp"

namespace unseen::corpus {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string sample_path() {
  return (std::filesystem::path(UNSEEN_TEST_DATA_DIR) / "sample.conllu").string();
}

constexpr std::string_view kTwoTokens =
    "# text = a b\n"
    "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
    "2\tb\tb\tVERB\t_\t_\t1\tdep\t_\t_\n"
    "\n";

TEST(ParseConllu, TwoTokenSentence) {
  const auto sentences = parse_conllu(kTwoTokens);
  ASSERT_EQ(sentences.size(), 1u);
  const ConlluSentence& s = sentences[0];
  ASSERT_EQ(s.tokens.size(), 2u);
  EXPECT_EQ(s.comments, std::vector<std::string>{"# text = a b"});
  EXPECT_EQ(s.tokens[0].head, 0);
  EXPECT_EQ(s.tokens[0].deprel, "root");
  EXPECT_EQ(s.tokens[1].id, 2);
  EXPECT_EQ(s.tokens[1].upos, "VERB");
}

TEST(ParseConllu, NineColumnsIsParseError) {
  try {
    parse_conllu("1\ta\ta\tNOUN\t_\t_\t0\troot\t_\n\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(ParseConllu, MultiwordToken) {
  const auto sentences = parse_conllu(
      "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tde\tde\tADP\t_\t_\t2\tcase\t_\t_\n"
      "2\tel\tel\tDET\t_\t_\t0\troot\t_\t_\n"
      "\n");
  ASSERT_EQ(sentences.size(), 1u);
  ASSERT_EQ(sentences[0].multiword_tokens.size(), 1u);
  const MultiwordToken& m = sentences[0].multiword_tokens[0];
  EXPECT_EQ(m.first, 1);
  EXPECT_EQ(m.last, 2);
  EXPECT_EQ(m.form, "del");
  EXPECT_EQ(sentences[0].tokens.size(), 2u);
}

TEST(ParseConllu, StructureErrors) {
  // Gap in ids.
  EXPECT_THROW(parse_conllu("1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n"
                            "3\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n\n"),
               StructureError);
  // Head out of range.
  try {
    parse_conllu("1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n"
                 "2\tb\tb\tX\t_\t_\t3\tdep\t_\t_\n\n");
    FAIL() << "expected StructureError";
  } catch (const StructureError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  // Multiword range past the end.
  EXPECT_THROW(parse_conllu("1-3\tab\t_\t_\t_\t_\t_\t_\t_\t_\n"
                            "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n"
                            "2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n\n"),
               StructureError);
}

TEST(ParseConllu, ParseErrors) {
  EXPECT_THROW(parse_conllu("x\ta\ta\tX\t_\t_\t0\troot\t_\t_\n\n"), ParseError);
  EXPECT_THROW(parse_conllu("1\ta\ta\tX\t_\t_\t-1\troot\t_\t_\n\n"), ParseError);
  EXPECT_THROW(parse_conllu("1\ta\ta\tX\t_\t_\t_\troot\t_\t_\n\n"), ParseError);
  EXPECT_THROW(parse_conllu("1\t\ta\tX\t_\t_\t0\troot\t_\t_\n\n"), ParseError);
  EXPECT_THROW(parse_conllu("1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n# late\n\n"),
               ParseError);
  EXPECT_THROW(parse_conllu("1\t\xff\ta\tX\t_\t_\t0\troot\t_\t_\n\n"),
               EncodingError);
}

TEST(ParseConllu, StrictRootChecks) {
  const std::string two_roots =
      "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n"
      "2\tb\tb\tX\t_\t_\t0\troot\t_\t_\n\n";
  EXPECT_NO_THROW(parse_conllu(two_roots));
  EXPECT_THROW(parse_conllu(two_roots, {.strict = true}), StructureError);
  const std::string mislabelled =
      "1\ta\ta\tX\t_\t_\t0\tnsubj\t_\t_\n\n";
  EXPECT_THROW(parse_conllu(mislabelled, {.strict = true}), StructureError);
  EXPECT_NO_THROW(parse_conllu(kTwoTokens, {.strict = true}));
}

TEST(ParseConllu, CrlfAndMissingFinalBlankLine) {
  std::string crlf;
  for (char c : kTwoTokens) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  EXPECT_EQ(parse_conllu(crlf), parse_conllu(kTwoTokens));
  const std::string_view unterminated = kTwoTokens.substr(0, kTwoTokens.size() - 1);
  EXPECT_EQ(parse_conllu(unterminated), parse_conllu(kTwoTokens));
}

TEST(WriteConllu, EmptyList) {
  EXPECT_EQ(write_conllu(std::vector<ConlluSentence>{}), "");
}

TEST(WriteConllu, SampleRoundTripsByteForByte) {
  const std::string text = read_file(sample_path());
  ASSERT_FALSE(text.empty());
  const auto sentences = parse_conllu(text);
  ASSERT_EQ(sentences.size(), 4u);
  EXPECT_EQ(sentences[1].multiword_tokens.size(), 1u);
  EXPECT_EQ(sentences[2].empty_nodes.size(), 1u);
  EXPECT_EQ(write_conllu(sentences), text);
}

TEST(WriteConllu, InvalidSentenceIsContractError) {
  ConlluSentence s;
  s.tokens.push_back({.id = 1, .form = "a", .lemma = "a", .upos = "X",
                      .xpos = "_", .feats = "_", .head = 5, .deprel = "root",
                      .deps = "_", .misc = "_"});
  EXPECT_THROW(write_conllu(std::vector<ConlluSentence>{s}), ContractError);
  EXPECT_THROW(check_sentence(s), ContractError);
  s.tokens[0].head = 0;
  EXPECT_NO_THROW(check_sentence(s));
  s.tokens[0].form = "a\tb";
  EXPECT_THROW(check_sentence(s), ContractError);
}

TEST(TransliterateConllu, ShinSentence) {
  const auto sentences = parse_conllu(
      "1\t\xd8\xb4\t\xd8\xb4\tX\t_\t_\t0\troot\t_\t_\n\n");
  const translit::Transliterator ug(translit::builtin_ruleset("uyghur_latin"));
  const auto out = transliterate_conllu(sentences, ug);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].tokens[0].form, "ş");
  EXPECT_EQ(out[0].tokens[0].lemma, "ş");
  EXPECT_EQ(out[0].tokens[0].upos, "X");
  EXPECT_EQ(out[0].tokens[0].head, 0);

  const auto no_lemma = transliterate_conllu(sentences, ug, {.lemmas = false});
  EXPECT_EQ(no_lemma[0].tokens[0].lemma, "ش");
}

TEST(TransliterateConllu, EmptyAndPassThrough) {
  const translit::Transliterator cyr(
      translit::builtin_ruleset("cyrillic_latin"));
  EXPECT_TRUE(transliterate_conllu({}, cyr).empty());

  const auto latin = parse_conllu(kTwoTokens);
  EXPECT_EQ(write_conllu(transliterate_conllu(latin, cyr)), kTwoTokens);
}

TEST(TransliterateConllu, RewritesMultiwordTokensAndEmptyNodes) {
  const auto sentences = parse_conllu(
      "1-2\tмон\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tмо\tмо\tX\t_\t_\t0\troot\t_\t_\n"
      "1.1\tш\tш\tX\t_\t_\t_\t_\t0:root\t_\n"
      "2\tн\tн\tX\t_\t_\t1\tdep\t_\t_\n\n");
  const translit::Transliterator cyr(
      translit::builtin_ruleset("cyrillic_latin"));
  const auto out = transliterate_conllu(sentences, cyr, {.jobs = 4});
  EXPECT_EQ(out[0].multiword_tokens[0].form, "mon");
  EXPECT_EQ(out[0].empty_nodes[0].fields[1], "sh");
  EXPECT_EQ(out[0].tokens[1].form, "n");
}

TEST(TransliterateConllu, FieldThatWouldVanishIsKept) {
  // A lone tatweel is deleted by the Uyghur table.
  const auto sentences =
      parse_conllu("1\t\xd9\x80\t\xd9\x80\tPUNCT\t_\t_\t0\troot\t_\t_\n\n");
  const translit::Transliterator ug(translit::builtin_ruleset("uyghur_latin"));
  EXPECT_EQ(transliterate_conllu(sentences, ug), sentences);
}

}  // namespace
}  // namespace unseen::corpus
