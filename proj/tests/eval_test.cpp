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

#include "unseen/eval.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "unseen/error.hpp"

namespace unseen::eval {
namespace {

using corpus::ConlluSentence;
using corpus::ConlluToken;
using corpus::NerSentence;

ConlluSentence sentence(const std::vector<std::string>& upos,
                        const std::vector<int>& heads,
                        const std::vector<std::string>& deprels) {
  ConlluSentence s;
  for (std::size_t i = 0; i < upos.size(); ++i) {
    s.tokens.push_back({.id = static_cast<int>(i) + 1, .form = "w",
                        .lemma = "w", .upos = upos[i], .xpos = "_",
                        .feats = "_", .head = heads[i],
                        .deprel = deprels[i], .deps = "_", .misc = "_"});
  }
  return s;
}

const std::vector<ConlluSentence> kGold = {
    sentence({"NOUN", "VERB", "NOUN"}, {2, 0, 2}, {"nsubj", "root", "obj"})};

TEST(EvalPos, Identical) {
  const PosScore s = eval_pos(kGold, kGold);
  EXPECT_EQ(s.correct, 3u);
  EXPECT_DOUBLE_EQ(s.accuracy, 100.0);
}

TEST(EvalPos, TwoOfThree) {
  const std::vector<ConlluSentence> pred = {
      sentence({"NOUN", "VERB", "VERB"}, {2, 0, 2}, {"nsubj", "root", "obj"})};
  const PosScore s = eval_pos(kGold, pred);
  EXPECT_NEAR(s.accuracy, 66.67, 0.01);
  EXPECT_EQ(format_percent(s.correct, s.total), "66.67");
}

TEST(EvalPos, Mismatch) {
  const std::vector<ConlluSentence> shorter = {
      sentence({"NOUN", "VERB"}, {2, 0}, {"nsubj", "root"})};
  EXPECT_THROW(eval_pos(kGold, shorter), AlignmentError);
  EXPECT_THROW(eval_pos(kGold, std::vector<ConlluSentence>{}), AlignmentError);
  EXPECT_THROW(eval_pos(std::vector<ConlluSentence>{},
                        std::vector<ConlluSentence>{}),
               DomainError);
}

TEST(EvalDep, Identical) {
  const DepScore s = eval_dep(kGold, kGold);
  EXPECT_DOUBLE_EQ(s.uas, 100.0);
  EXPECT_DOUBLE_EQ(s.las, 100.0);
}

TEST(EvalDep, OneLabelWrong) {
  const std::vector<ConlluSentence> pred = {
      sentence({"NOUN", "VERB", "NOUN"}, {2, 0, 2}, {"nsubj", "root", "iobj"})};
  const DepScore s = eval_dep(kGold, pred);
  EXPECT_DOUBLE_EQ(s.uas, 100.0);
  EXPECT_NEAR(s.las, 66.67, 0.01);
}

TEST(EvalDep, AllHeadsWrong) {
  const std::vector<ConlluSentence> pred = {
      sentence({"NOUN", "VERB", "NOUN"}, {0, 3, 1}, {"nsubj", "root", "obj"})};
  const DepScore s = eval_dep(kGold, pred);
  EXPECT_DOUBLE_EQ(s.uas, 0.0);
  EXPECT_DOUBLE_EQ(s.las, 0.0);
}

TEST(EvalDep, SubtypesIgnoredUnlessExact) {
  const std::vector<ConlluSentence> pred = {sentence(
      {"NOUN", "VERB", "NOUN"}, {2, 0, 2}, {"nsubj:pass", "root", "obj"})};
  EXPECT_DOUBLE_EQ(eval_dep(kGold, pred).las, 100.0);
  EXPECT_NEAR(eval_dep(kGold, pred, DeprelMatch::kExact).las, 66.67, 0.01);
}

TEST(EvalNer, Identical) {
  const std::vector<NerSentence> gold = {
      {{"a", "b", "c"}, {"B-PER", "I-PER", "O"}}};
  const NerScore s = eval_ner(gold, gold);
  EXPECT_DOUBLE_EQ(s.precision, 100.0);
  EXPECT_DOUBLE_EQ(s.recall, 100.0);
  EXPECT_DOUBLE_EQ(s.f1, 100.0);
}

TEST(EvalNer, MissedSpan) {
  // Gold PER over tokens 1-2 and LOC over token 4 (1-based).
  const std::vector<NerSentence> gold = {
      {{"a", "b", "c", "d"}, {"B-PER", "I-PER", "O", "B-LOC"}}};
  const std::vector<NerSentence> pred = {
      {{"a", "b", "c", "d"}, {"B-PER", "I-PER", "O", "O"}}};
  const NerScore s = eval_ner(gold, pred);
  EXPECT_EQ(s.tp, 1u);
  EXPECT_EQ(s.fn, 1u);
  EXPECT_DOUBLE_EQ(s.precision, 100.0);
  EXPECT_DOUBLE_EQ(s.recall, 50.0);
  EXPECT_NEAR(s.f1, 66.67, 0.01);
}

TEST(EvalNer, ExtraSpanCountsAsFalsePositive) {
  const std::vector<NerSentence> gold = {{{"a", "b"}, {"B-PER", "O"}}};
  const std::vector<NerSentence> pred = {{{"a", "b"}, {"B-PER", "B-LOC"}}};
  const NerScore s = eval_ner(gold, pred);
  EXPECT_EQ(s.fp, 1u);
  EXPECT_DOUBLE_EQ(s.precision, 50.0);
  EXPECT_DOUBLE_EQ(s.recall, 100.0);
}

TEST(EvalNer, BoundariesAndTypesMustMatch) {
  const std::vector<NerSentence> gold = {{{"a", "b"}, {"B-PER", "I-PER"}}};
  const std::vector<NerSentence> wrong_end = {{{"a", "b"}, {"B-PER", "O"}}};
  const std::vector<NerSentence> wrong_type = {{{"a", "b"}, {"B-ORG", "I-ORG"}}};
  EXPECT_EQ(eval_ner(gold, wrong_end).tp, 0u);
  EXPECT_EQ(eval_ner(gold, wrong_type).tp, 0u);
}

TEST(EvalNer, Errors) {
  const std::vector<NerSentence> gold = {{{"a"}, {"B-PER"}}};
  const std::vector<NerSentence> dangling = {{{"a"}, {"I-PER"}}};
  const std::vector<NerSentence> longer = {{{"a", "b"}, {"O", "O"}}};
  EXPECT_THROW(eval_ner(gold, dangling), ValidationError);
  EXPECT_THROW(eval_ner(gold, longer), AlignmentError);
}

TEST(NerCounts, ZeroDenominators) {
  const NerScore none = ner_score_from_counts(0, 0, 0);
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.recall, 0.0);
  EXPECT_EQ(none.f1, 0.0);
  const NerScore s = ner_score_from_counts(1, 1, 0);
  EXPECT_DOUBLE_EQ(s.precision, 50.0);
}

TEST(AggregateRuns, Examples) {
  const std::vector<double> one_two_three = {1, 2, 3};
  EXPECT_DOUBLE_EQ(aggregate_runs(one_two_three).mean, 2.0);

  const std::vector<double> single = {42.5};
  const RunAggregate a = aggregate_runs(single);
  EXPECT_DOUBLE_EQ(a.mean, 42.5);
  EXPECT_DOUBLE_EQ(a.sd, 0.0);

  const std::vector<double> five = {80.0, 82.0, 81.0, 79.0, 83.0};
  const RunAggregate b = aggregate_runs(five);
  EXPECT_DOUBLE_EQ(b.mean, 81.0);
  EXPECT_NEAR(b.sd, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(b.min, 79.0);
  EXPECT_EQ(b.max, 83.0);
  EXPECT_THROW(aggregate_runs(std::vector<double>{}), DomainError);
}

TEST(Formatting, HalfUp) {
  EXPECT_EQ(format_score(66.665), "66.67");
  EXPECT_EQ(format_score(66.664), "66.66");
  EXPECT_EQ(format_score(100.0), "100.00");
  EXPECT_EQ(format_score(0.0), "0.00");
  EXPECT_EQ(format_percent(2, 3), "66.67");
  EXPECT_EQ(format_percent(1, 3), "33.33");
  EXPECT_EQ(format_percent(1, 8), "12.50");
  EXPECT_EQ(format_percent(1, 80000), "0.00");
  EXPECT_EQ(format_percent(1, 20000), "0.01");  // exactly 0.005
  EXPECT_EQ(format_percent(5, 5), "100.00");
  EXPECT_EQ(format_percent(0, 0), "0.00");
}

}  // namespace
}  // namespace unseen::eval
