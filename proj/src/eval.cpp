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

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>
#include <string_view>

#include <fmt/format.h>

#include "unseen/error.hpp"

namespace unseen::eval {
namespace {

double percent(std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) return 0.0;
  return 100.0 * static_cast<double>(numerator) /
         static_cast<double>(denominator);
}

template <typename Sentence, typename Count>
void check_alignment(std::span<const Sentence> gold,
                     std::span<const Sentence> pred, Count words) {
  if (gold.size() != pred.size()) {
    throw AlignmentError("gold has " + std::to_string(gold.size()) +
                         " sentences, prediction has " +
                         std::to_string(pred.size()));
  }
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (words(gold[i]) != words(pred[i])) {
      throw AlignmentError("sentence " + std::to_string(i + 1) + ": gold has " +
                           std::to_string(words(gold[i])) +
                           " tokens, prediction has " +
                           std::to_string(words(pred[i])));
    }
  }
}

void check_conllu(std::span<const corpus::ConlluSentence> gold,
                  std::span<const corpus::ConlluSentence> pred) {
  check_alignment(gold, pred, [](const corpus::ConlluSentence& s) {
    return s.tokens.size();
  });
}

std::string_view relation(std::string_view deprel, DeprelMatch match) {
  return match == DeprelMatch::kExact ? deprel
                                      : deprel.substr(0, deprel.find(':'));
}

void require_iob2(std::span<const corpus::NerSentence> sentences,
                  std::string_view side) {
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (auto bad = corpus::first_iob2_violation(sentences[i].labels)) {
      throw ValidationError(std::string(side) + " label " +
                                sentences[i].labels[*bad] + " at token " +
                                std::to_string(*bad + 1) +
                                " does not continue an entity",
                            i + 1);
    }
  }
}

}  // namespace

PosScore eval_pos(std::span<const corpus::ConlluSentence> gold,
                  std::span<const corpus::ConlluSentence> pred) {
  check_conllu(gold, pred);
  PosScore score;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    for (std::size_t t = 0; t < gold[s].tokens.size(); ++t) {
      ++score.total;
      if (gold[s].tokens[t].upos == pred[s].tokens[t].upos) ++score.correct;
    }
  }
  if (score.total == 0) throw DomainError("no words to score");
  score.accuracy = percent(score.correct, score.total);
  return score;
}

DepScore eval_dep(std::span<const corpus::ConlluSentence> gold,
                  std::span<const corpus::ConlluSentence> pred,
                  DeprelMatch match) {
  check_conllu(gold, pred);
  DepScore score;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    for (std::size_t t = 0; t < gold[s].tokens.size(); ++t) {
      const corpus::ConlluToken& g = gold[s].tokens[t];
      const corpus::ConlluToken& p = pred[s].tokens[t];
      ++score.total;
      if (g.head != p.head) continue;
      ++score.head_correct;
      if (relation(g.deprel, match) == relation(p.deprel, match)) {
        ++score.labeled_correct;
      }
    }
  }
  if (score.total == 0) throw DomainError("no words to score");
  score.uas = percent(score.head_correct, score.total);
  score.las = percent(score.labeled_correct, score.total);
  return score;
}

NerScore ner_score_from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  NerScore score{tp, fp, fn};
  score.precision = percent(tp, tp + fp);
  score.recall = percent(tp, tp + fn);
  const double sum = score.precision + score.recall;
  score.f1 = sum == 0.0 ? 0.0 : 2.0 * score.precision * score.recall / sum;
  return score;
}

NerScore eval_ner(std::span<const corpus::NerSentence> gold,
                  std::span<const corpus::NerSentence> pred) {
  check_alignment(gold, pred, [](const corpus::NerSentence& s) {
    return s.tokens.size();
  });
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].labels.size() != gold[i].tokens.size() ||
        pred[i].labels.size() != pred[i].tokens.size()) {
      throw AlignmentError("sentence " + std::to_string(i + 1) +
                           ": token and label counts differ");
    }
  }
  require_iob2(gold, "gold");
  require_iob2(pred, "predicted");

  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const std::vector<corpus::EntitySpan> g = corpus::extract_spans(gold[i].labels);
    const std::vector<corpus::EntitySpan> p = corpus::extract_spans(pred[i].labels);
    // extract_spans yields spans sorted by start, and starts are unique.
    std::vector<corpus::EntitySpan> common;
    std::set_intersection(g.begin(), g.end(), p.begin(), p.end(),
                          std::back_inserter(common));
    tp += common.size();
    fp += p.size() - common.size();
    fn += g.size() - common.size();
  }
  return ner_score_from_counts(tp, fp, fn);
}

RunAggregate aggregate_runs(std::span<const double> scores) {
  if (scores.empty()) throw DomainError("no scores to aggregate");
  RunAggregate aggregate;
  aggregate.scores.assign(scores.begin(), scores.end());
  double sum = 0.0;
  for (double s : scores) sum += s;
  const double n = static_cast<double>(scores.size());
  aggregate.mean = sum / n;
  double squares = 0.0;
  for (double s : scores) squares += (s - aggregate.mean) * (s - aggregate.mean);
  aggregate.sd = std::sqrt(squares / n);
  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  aggregate.min = *lo;
  aggregate.max = *hi;
  // Rounding can push the mean a hair outside [min, max].
  aggregate.mean = std::clamp(aggregate.mean, aggregate.min, aggregate.max);
  return aggregate;
}

std::string format_score(double value) {
  // The epsilon absorbs binary representation error, e.g. 66.665 is stored
  // as 66.66499999...
  const double hundredths = std::floor(value * 100.0 + 0.5 + 1e-7);
  return fmt::format("{:.2f}", hundredths / 100.0);
}

std::string format_percent(std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) return "0.00";
  // round_half_up(10000 * n / d) = floor((20000 * n + d) / (2 * d))
  const unsigned long long n = numerator;
  const unsigned long long d = denominator;
  const unsigned long long hundredths = (20000ULL * n + d) / (2ULL * d);
  return fmt::format("{}.{:02}", hundredths / 100, hundredths % 100);
}

}  // namespace unseen::eval
