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

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "unseen/error.hpp"

namespace unseen::taxonomy {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t pos; (pos = line.find('\t', start)) != std::string_view::npos;
       start = pos + 1) {
    fields.push_back(line.substr(start, pos - start));
  }
  fields.push_back(line.substr(start));
  return fields;
}

std::optional<double> parse_double(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::string_view to_string(Task task) {
  switch (task) {
    case Task::kPos: return "POS";
    case Task::kDep: return "DEP";
    case Task::kNer: return "NER";
  }
  return "POS";
}

std::string_view to_string(Category category) {
  switch (category) {
    case Category::kEasy: return "Easy";
    case Category::kIntermediate: return "Intermediate";
    case Category::kHard: return "Hard";
  }
  return "Hard";
}

std::optional<Task> parse_task(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Task task : {Task::kPos, Task::kDep, Task::kNer}) {
    if (upper == to_string(task)) return task;
  }
  return std::nullopt;
}

double relative_delta(double score, double baseline) {
  if (!(baseline > 0.0)) {
    throw DomainError("baseline must be positive, got " + fmt::format("{}", baseline));
  }
  return (score - baseline) / baseline;
}

Category categorize(double x, double y, double tau) {
  if (y < tau) return Category::kHard;
  if (x >= tau) return Category::kEasy;
  return Category::kIntermediate;
}

CategoryPoint locate(const ScorePoint& point, double tau) {
  if (!(point.mbert > 0.0) || !(point.mbert_mlm > 0.0)) {
    throw DomainError("scores of " + point.language + " " +
                      std::string(to_string(point.task)) +
                      " must be positive");
  }
  CategoryPoint located;
  located.language = point.language;
  located.task = point.task;
  located.x = relative_delta(point.mbert, point.baseline);
  located.y = relative_delta(point.mbert_mlm, point.baseline);
  located.category = categorize(located.x, located.y, tau);
  return located;
}

Category categorize_language(std::span<const CategoryPoint> points) {
  if (points.empty()) throw DomainError("no points to categorize");
  std::array<int, 3> votes{};
  for (const CategoryPoint& p : points) ++votes[static_cast<int>(p.category)];
  // Scan from Hard down so that ties keep the harder category.
  int best = 2;
  for (int c = 1; c >= 0; --c) {
    if (votes[c] > votes[best]) best = c;
  }
  return static_cast<Category>(best);
}

std::vector<LanguageCategory> categorize_languages(
    std::span<const CategoryPoint> points) {
  std::vector<std::string> order;
  for (const CategoryPoint& p : points) {
    if (std::find(order.begin(), order.end(), p.language) == order.end()) {
      order.push_back(p.language);
    }
  }
  std::vector<LanguageCategory> result;
  for (const std::string& language : order) {
    std::vector<CategoryPoint> mine;
    std::copy_if(points.begin(), points.end(), std::back_inserter(mine),
                 [&](const CategoryPoint& p) { return p.language == language; });
    result.push_back({language, categorize_language(mine)});
  }
  return result;
}

std::vector<ScorePoint> parse_score_points(std::istream& in) {
  std::vector<ScorePoint> points;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string_view> fields = split_tabs(line);
    if (fields[0] == "language") continue;
    if (fields.size() != 5) {
      throw ParseError("expected 5 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       number);
    }
    if (fields[0].empty()) throw ParseError("empty language", number);
    const std::optional<Task> task = parse_task(fields[1]);
    if (!task) {
      throw ParseError("unknown task '" + std::string(fields[1]) + "'", number);
    }
    std::array<double, 3> scores{};
    for (std::size_t i = 0; i < 3; ++i) {
      const std::optional<double> value = parse_double(fields[2 + i]);
      if (!value || *value <= 0.0) {
        throw ParseError("score '" + std::string(fields[2 + i]) +
                             "' is not a positive number",
                         number);
      }
      scores[i] = *value;
    }
    points.push_back(
        {std::string(fields[0]), *task, scores[0], scores[1], scores[2]});
  }
  return points;
}

void write_category_points(std::ostream& out,
                           std::span<const CategoryPoint> points) {
  out << "language\ttask\tx\ty\tcategory\n";
  for (const CategoryPoint& p : points) {
    out << fmt::format("{}\t{}\t{:.5f}\t{:.5f}\t{}\n", p.language,
                       to_string(p.task), p.x, p.y, to_string(p.category));
  }
}

void write_language_categories(std::ostream& out,
                               std::span<const LanguageCategory> categories) {
  out << "language\tcategory\n";
  for (const LanguageCategory& c : categories) {
    out << c.language << '\t' << to_string(c.category) << '\n';
  }
}

}  // namespace unseen::taxonomy
