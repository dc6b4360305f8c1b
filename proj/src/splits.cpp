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

#include "unseen/splits.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "unseen/error.hpp"

namespace unseen::splits {
namespace {

// Uniform integer in [0, bound) by rejection, so the result depends only on
// the engine output and not on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine();
  } while (draw >= limit);
  return draw % bound;
}

void check_fold(const FoldAssignment& assignment, int fold) {
  if (fold < 0 || fold >= assignment.k) {
    throw SizeError("fold " + std::to_string(fold) + " is out of range 0.." +
                    std::to_string(assignment.k - 1));
  }
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::kStandard ? "standard" : "cross-validation";
}

std::string_view to_string(DevSource source) {
  switch (source) {
    case DevSource::kProvided: return "provided";
    case DevSource::kHeldOutFold: return "held-out-fold";
    case DevSource::kNone: return "none";
  }
  return "none";
}

SplitPlan plan_splits(std::size_t n_train, bool has_dev, int k,
                      std::uint64_t seed) {
  if (k < 2) throw SizeError("cross-validation needs at least 2 folds");
  SplitPlan plan;
  plan.k = k;
  plan.seed = seed;
  if (n_train >= kMinStandardTrain) {
    plan.strategy = Strategy::kStandard;
    plan.dev_source = has_dev ? DevSource::kProvided : DevSource::kNone;
  } else {
    plan.strategy = Strategy::kCrossValidation;
    plan.dev_source = has_dev ? DevSource::kProvided : DevSource::kHeldOutFold;
  }
  return plan;
}

std::vector<std::size_t> FoldAssignment::fold_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
  for (int fold : fold_of) ++sizes[static_cast<std::size_t>(fold)];
  return sizes;
}

std::vector<std::size_t> FoldAssignment::members(int fold) const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] == fold) ids.push_back(i);
  }
  return ids;
}

FoldAssignment make_folds(std::size_t n, int k, std::uint64_t seed) {
  if (k < 2) throw SizeError("cross-validation needs at least 2 folds");
  if (n < static_cast<std::size_t>(k)) {
    throw SizeError("cannot split " + std::to_string(n) + " sentences into " +
                    std::to_string(k) + " folds");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 engine(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_below(engine, i + 1)]);
  }

  FoldAssignment assignment;
  assignment.k = k;
  assignment.fold_of.resize(n);
  const auto folds = static_cast<std::size_t>(k);
  for (std::size_t j = 0; j < n; ++j) {
    assignment.fold_of[order[j]] = static_cast<int>(folds - 1 - j % folds);
  }
  return assignment;
}

std::vector<Run> plan_runs(const SplitPlan& plan) {
  std::vector<Run> runs;
  if (plan.strategy != Strategy::kCrossValidation) return runs;
  const bool held_out = plan.dev_source == DevSource::kHeldOutFold;
  for (int fold = held_out ? 1 : 0; fold < plan.k; ++fold) {
    runs.push_back({static_cast<int>(runs.size()), fold,
                    held_out ? std::optional<int>(0) : std::nullopt});
  }
  return runs;
}

RunSplit materialize_run(const FoldAssignment& assignment, int test_fold,
                         std::optional<int> dev_fold) {
  check_fold(assignment, test_fold);
  if (dev_fold) {
    check_fold(assignment, *dev_fold);
    if (*dev_fold == test_fold) {
      throw ContractError("test and dev folds must differ");
    }
  }
  RunSplit split;
  for (std::size_t i = 0; i < assignment.fold_of.size(); ++i) {
    const int fold = assignment.fold_of[i];
    if (fold == test_fold) {
      split.test.push_back(i);
    } else if (dev_fold && fold == *dev_fold) {
      split.dev.push_back(i);
    } else {
      split.train.push_back(i);
    }
  }
  return split;
}

void write_fold_manifest(std::ostream& out, const FoldAssignment& assignment) {
  out << "sentence_index\tfold\n";
  for (std::size_t i = 0; i < assignment.fold_of.size(); ++i) {
    out << i << '\t' << assignment.fold_of[i] << '\n';
  }
}

void write_run_manifest(std::ostream& out, const SplitPlan& plan) {
  out << "run\trole\tfold\n";
  for (const Run& run : plan_runs(plan)) {
    for (int fold = 0; fold < plan.k; ++fold) {
      std::string_view role = "train";
      if (fold == run.test_fold) {
        role = "test";
      } else if (run.dev_fold && fold == *run.dev_fold) {
        role = "dev";
      }
      out << run.index << '\t' << role << '\t' << fold << '\n';
    }
  }
}

void write_plan(std::ostream& out, const SplitPlan& plan, std::size_t n_train,
                std::size_t pool) {
  out << "strategy\t" << to_string(plan.strategy) << '\n'
      << "train_sentences\t" << n_train << '\n';
  if (plan.strategy == Strategy::kCrossValidation) {
    out << "pool_sentences\t" << pool << '\n'
        << "folds\t" << plan.k << '\n'
        << "runs\t" << plan_runs(plan).size() << '\n';
  }
  out << "dev\t" << to_string(plan.dev_source) << '\n'
      << "seed\t" << plan.seed << '\n';
}

}  // namespace unseen::splits
