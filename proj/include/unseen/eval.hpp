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

#ifndef UNSEEN_EVAL_HPP_
#define UNSEEN_EVAL_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "unseen/conllu.hpp"
#include "unseen/ner.hpp"

namespace unseen::eval {

// All percentages are in [0, 100].

struct PosScore {
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
};

struct DepScore {
  std::size_t head_correct = 0;
  std::size_t labeled_correct = 0;
  std::size_t total = 0;
  double uas = 0.0;
  double las = 0.0;
};

struct NerScore {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;  // 0 when nothing was predicted
  double recall = 0.0;     // 0 when there is nothing to find
  double f1 = 0.0;         // 0 when precision + recall is 0
};

struct RunAggregate {
  std::vector<double> scores;
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
};

enum class DeprelMatch {
  kMainRelation,  // "nmod:poss" matches "nmod"
  kExact,
};

// UPOS accuracy over syntactic words; multiword token lines and empty nodes
// are not scored. Throws AlignmentError naming the first sentence whose word
// count differs, and DomainError for corpora without words.
PosScore eval_pos(std::span<const corpus::ConlluSentence> gold,
                  std::span<const corpus::ConlluSentence> pred);

// Attachment scores over all words, punctuation included.
DepScore eval_dep(std::span<const corpus::ConlluSentence> gold,
                  std::span<const corpus::ConlluSentence> pred,
                  DeprelMatch match = DeprelMatch::kMainRelation);

// Exact-match span scoring: a predicted span counts only if its first token,
// last token and type all equal those of a gold span. Both sides must be
// strictly valid IOB2 (ValidationError otherwise).
NerScore eval_ner(std::span<const corpus::NerSentence> gold,
                  std::span<const corpus::NerSentence> pred);

NerScore ner_score_from_counts(std::size_t tp, std::size_t fp, std::size_t fn);

// Throws DomainError for an empty list.
RunAggregate aggregate_runs(std::span<const double> scores);

// Two decimals, halves rounded up: 66.665 -> "66.67".
std::string format_score(double value);

// 100 * numerator / denominator with two decimals, computed exactly.
std::string format_percent(std::size_t numerator, std::size_t denominator);

}  // namespace unseen::eval

#endif  // UNSEEN_EVAL_HPP_
