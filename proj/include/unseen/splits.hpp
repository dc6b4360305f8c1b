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

#ifndef UNSEEN_SPLITS_HPP_
#define UNSEEN_SPLITS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace unseen::splits {

// Datasets with fewer training sentences than this are evaluated with
// k-fold cross-validation over train+test.
inline constexpr std::size_t kMinStandardTrain = 500;
inline constexpr int kDefaultFolds = 8;

enum class Strategy { kStandard, kCrossValidation };
enum class DevSource {
  kProvided,    // the dataset's own validation split
  kHeldOutFold, // fold 0 of the cross-validation pool
  kNone,        // standard split of a dataset without validation data
};

std::string_view to_string(Strategy strategy);
std::string_view to_string(DevSource source);

struct SplitPlan {
  Strategy strategy = Strategy::kStandard;
  int k = kDefaultFolds;
  DevSource dev_source = DevSource::kProvided;
  std::uint64_t seed = 0;

  bool operator==(const SplitPlan&) const = default;
};

// Standard split when n_train >= 500, otherwise cross-validation with `k`
// folds. A held-out fold is used for validation only when the dataset has no
// validation split. Throws SizeError if k < 2.
SplitPlan plan_splits(std::size_t n_train, bool has_dev,
                      int k = kDefaultFolds, std::uint64_t seed = 0);

struct FoldAssignment {
  int k = 0;
  std::vector<int> fold_of;  // fold of each sentence index

  std::vector<std::size_t> fold_sizes() const;
  std::vector<std::size_t> members(int fold) const;  // ascending

  bool operator==(const FoldAssignment&) const = default;
};

// Shuffles 0..n-1 with Fisher-Yates driven by std::mt19937_64(seed), then
// deals the shuffled indices round robin. The n % k larger folds are the
// highest-numbered ones, so fold 0 (the held-out validation fold) is never
// larger than a test fold. Output is identical on every platform.
// Throws SizeError unless n >= k >= 2.
FoldAssignment make_folds(std::size_t n, int k, std::uint64_t seed);

// One training run of a cross-validation plan.
struct Run {
  int index = 0;
  int test_fold = 0;
  std::optional<int> dev_fold;
};

// Held-out validation: dev is fold 0 and the test fold rotates over 1..k-1.
// Otherwise the test fold rotates over all k folds.
std::vector<Run> plan_runs(const SplitPlan& plan);

struct RunSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> dev;  // empty when validation data is provided
  std::vector<std::size_t> test;
};

// Throws SizeError for a fold index out of range and ContractError when the
// test and dev folds coincide.
RunSplit materialize_run(const FoldAssignment& assignment, int test_fold,
                         std::optional<int> dev_fold = std::nullopt);

// sentence_index<TAB>fold, with a header.
void write_fold_manifest(std::ostream& out, const FoldAssignment& assignment);

// run<TAB>role<TAB>fold, one row per fold and run, with a header.
void write_run_manifest(std::ostream& out, const SplitPlan& plan);

// key<TAB>value rows describing the plan.
void write_plan(std::ostream& out, const SplitPlan& plan, std::size_t n_train,
                std::size_t pool);

}  // namespace unseen::splits

#endif  // UNSEEN_SPLITS_HPP_
