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

#ifndef UNSEEN_SRC_BUILTIN_RULES_H_
#define UNSEEN_SRC_BUILTIN_RULES_H_

#include <span>
#include <string_view>

namespace unseen::translit::internal {

struct BuiltinRuleText {
  std::string_view name;
  std::string_view text;
};

std::span<const BuiltinRuleText> builtin_rule_texts();

}  // namespace unseen::translit::internal

#endif  // UNSEEN_SRC_BUILTIN_RULES_H_
