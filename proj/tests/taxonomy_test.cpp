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

#include "unseen/taxonomy.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "unseen/error.hpp"

namespace unseen::taxonomy {
namespace {

TEST(RelativeDelta, Examples) {
  EXPECT_DOUBLE_EQ(relative_delta(50.0, 50.0), 0.0);
  // Uyghur POS: baseline 89.97, mBERT 76.98.
  EXPECT_NEAR(relative_delta(76.98, 89.97), -0.14438, 1e-5);
  // Faroese POS: baseline 95.36, mBERT 96.31.
  EXPECT_NEAR(relative_delta(96.31, 95.36), 0.00996, 1e-5);
  EXPECT_THROW(relative_delta(1.0, 0.0), DomainError);
  EXPECT_THROW(relative_delta(1.0, -2.0), DomainError);
}

TEST(Categorize, Examples) {
  EXPECT_EQ(categorize(0.00996, 0.01216), Category::kEasy);
  EXPECT_EQ(categorize(-0.04157, 0.00427), Category::kIntermediate);
  EXPECT_EQ(categorize(-0.14438, -0.01734), Category::kHard);
  EXPECT_EQ(categorize(0.0, 0.0), Category::kEasy);
}

TEST(Categorize, HardTakesPrecedenceAndTau) {
  EXPECT_EQ(categorize(0.077, -0.271), Category::kHard);
  EXPECT_EQ(categorize(0.05, 0.2, 0.1), Category::kIntermediate);
  EXPECT_EQ(categorize(0.05, 0.05, 0.1), Category::kHard);
  EXPECT_EQ(categorize(0.1, 0.1, 0.1), Category::kEasy);
}

TEST(Locate, KnownCoordinates) {
  const CategoryPoint p = locate({"ug", Task::kPos, 89.97, 76.98, 88.41});
  EXPECT_NEAR(p.x, -0.14438, 1e-5);
  EXPECT_NEAR(p.y, -0.01734, 1e-5);
  EXPECT_EQ(p.category, Category::kHard);
  const CategoryPoint m = locate({"mlt", Task::kPos, 95.99, 92.0, 96.4});
  EXPECT_NEAR(m.x, -0.04157, 1e-5);
  EXPECT_NEAR(m.y, 0.00427, 1e-5);
  EXPECT_EQ(m.category, Category::kIntermediate);
  EXPECT_THROW(locate({"x", Task::kPos, 50.0, 0.0, 50.0}), DomainError);
}

CategoryPoint point(Category c) {
  return {"xx", Task::kPos, 0.0, 0.0, c};
}

TEST(CategorizeLanguage, Examples) {
  using enum Category;
  const std::vector<CategoryPoint> tie = {point(kIntermediate), point(kHard)};
  EXPECT_EQ(categorize_language(tie), kHard);
  const std::vector<CategoryPoint> easy = {point(kEasy), point(kEasy),
                                           point(kEasy)};
  EXPECT_EQ(categorize_language(easy), kEasy);
  const std::vector<CategoryPoint> majority = {
      point(kIntermediate), point(kIntermediate), point(kHard)};
  EXPECT_EQ(categorize_language(majority), kIntermediate);
  const std::vector<CategoryPoint> three_way = {point(kEasy),
                                                point(kIntermediate),
                                                point(kHard)};
  EXPECT_EQ(categorize_language(three_way), kHard);
  EXPECT_THROW(categorize_language(std::vector<CategoryPoint>{}), DomainError);
}

TEST(CategorizeLanguages, FirstAppearanceOrder) {
  std::vector<CategoryPoint> points = {
      {"b", Task::kPos, 0, 0, Category::kEasy},
      {"a", Task::kPos, 0, 0, Category::kHard},
      {"b", Task::kDep, 0, 0, Category::kIntermediate}};
  const auto langs = categorize_languages(points);
  ASSERT_EQ(langs.size(), 2u);
  EXPECT_EQ(langs[0].language, "b");
  EXPECT_EQ(langs[0].category, Category::kIntermediate);
  EXPECT_EQ(langs[1].language, "a");
}

TEST(ParseScorePoints, HeaderCommentsAndErrors) {
  std::istringstream in(
      "language\ttask\tbaseline\tmbert\tmbert_mlm\n"
      "# Faroese\n\n"
      "fao\tPOS\t95.36\t96.31\t96.52\n"
      "ug\tdep\t67.09\t72.26\t48.91\n");
  const auto points = parse_score_points(in);
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(points[1].task, Task::kDep);
  EXPECT_DOUBLE_EQ(points[0].mbert, 96.31);

  std::istringstream bad_task("fao\tLEMMA\t1\t2\t3\n");
  EXPECT_THROW(parse_score_points(bad_task), ParseError);
  std::istringstream bad_number("fao\tPOS\t1\tx\t3\n");
  EXPECT_THROW(parse_score_points(bad_number), ParseError);
  std::istringstream short_row("fao\tPOS\t1\t2\n");
  try {
    parse_score_points(short_row);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(Writers, Formats) {
  const std::vector<CategoryPoint> points = {
      locate({"fao", Task::kPos, 95.36, 96.31, 96.52})};
  std::ostringstream out;
  write_category_points(out, points);
  EXPECT_EQ(out.str(),
            "language\ttask\tx\ty\tcategory\n"
            "fao\tPOS\t0.00996\t0.01216\tEasy\n");
  std::ostringstream langs;
  write_language_categories(langs, categorize_languages(points));
  EXPECT_EQ(langs.str(), "language\tcategory\nfao\tEasy\n");
}

}  // namespace
}  // namespace unseen::taxonomy
