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

#ifndef UNSEEN_UNICODE_HPP_
#define UNSEEN_UNICODE_HPP_

// Thin wrappers over ICU for the handful of Unicode services the toolkit
// needs. All strings are UTF-8.

#include <string>
#include <string_view>
#include <vector>

namespace unseen::unicode {

bool is_valid_utf8(std::string_view text);

// Throws EncodingError when `text` is not well-formed UTF-8.
void require_valid_utf8(std::string_view text);

// Canonical composition. Throws EncodingError on malformed input.
std::string to_nfc(std::string_view text);
bool is_nfc(std::string_view text);

// Extended grapheme clusters of `text`, which is taken as is (no
// normalization). Throws EncodingError on malformed input.
std::vector<std::string> grapheme_clusters(std::string_view text);

// First code point of a non-empty valid UTF-8 string.
char32_t first_code_point(std::string_view text);

// Strips leading and trailing White_Space code points.
std::string_view trim(std::string_view text);

}  // namespace unseen::unicode

#endif  // UNSEEN_UNICODE_HPP_
