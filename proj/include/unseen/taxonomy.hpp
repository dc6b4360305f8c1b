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

#ifndef UNSEEN_TAXONOMY_HPP_
#define UNSEEN_TAXONOMY_HPP_

// Easy / Intermediate / Hard categorization of unseen languages.
//
// Each (language, task) pair has a non-contextual baseline score, the score
// of a multilingual model fine-tuned on the task, and the score of the same
// model after masked-language-model tuning on raw target-language text.
// Both model scores are placed relative to the baseline:
//
//   x = (mbert - baseline) / baseline
//   y = (mbert_mlm - baseline) / baseline
//
// A pair is Hard when even the adapted model stays below the threshold
// (y < tau), Easy when the unadapted model already reaches it (x >= tau), and
// Intermediate otherwise.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unseen::taxonomy {

enum class Task { kPos, kDep, kNer };
enum class Category { kEasy, kIntermediate, kHard };

std::string_view to_string(Task task);
std::string_view to_string(Category category);
std::optional<Task> parse_task(std::string_view name);  // case-insensitive

struct ScorePoint {
  std::string language;
  Task task = Task::kPos;
  double baseline = 0.0;  // all three in percent, > 0
  double mbert = 0.0;
  double mbert_mlm = 0.0;
};

struct CategoryPoint {
  std::string language;
  Task task = Task::kPos;
  double x = 0.0;
  double y = 0.0;
  Category category = Category::kEasy;
};

// (score - baseline) / baseline. Throws DomainError if baseline <= 0.
double relative_delta(double score, double baseline);

Category categorize(double x, double y, double tau = 0.0);

// Throws DomainError if any score is not positive.
CategoryPoint locate(const ScorePoint& point, double tau = 0.0);

// Most frequent category among the points; ties go to the harder one.
// Throws DomainError for an empty list.
Category categorize_language(std::span<const CategoryPoint> points);

struct LanguageCategory {
  std::string language;
  Category category;
};

// One entry per language, in order of first appearance.
std::vector<LanguageCategory> categorize_languages(
    std::span<const CategoryPoint> points);

// language<TAB>task<TAB>baseline<TAB>mbert<TAB>mbert_mlm. Blank lines, '#'
// comments and a header row starting with "language" are skipped. Throws
// ParseError with the line number for malformed rows.
std::vector<ScorePoint> parse_score_points(std::istream& in);

// language<TAB>task<TAB>x<TAB>y<TAB>category with a header row.
void write_category_points(std::ostream& out,
                           std::span<const CategoryPoint> points);

// language<TAB>category with a header row.
void write_language_categories(std::ostream& out,
                               std::span<const LanguageCategory> categories);

}  // namespace unseen::taxonomy

#endif  // UNSEEN_TAXONOMY_HPP_
