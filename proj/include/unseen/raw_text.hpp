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

#ifndef UNSEEN_RAW_TEXT_HPP_
#define UNSEEN_RAW_TEXT_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace unseen::translit {
class Transliterator;
}

namespace unseen::corpus {

// One sentence per line. A trailing '\r' is dropped; throws EncodingError
// (with line number) on malformed UTF-8.
std::vector<std::string> read_lines(std::istream& in);

void write_lines(std::ostream& out, std::span<const std::string> lines);

// Keeps the first occurrence of each line, in input order. Two lines are
// equal when their NFC forms match after trimming surrounding whitespace;
// lines that are empty after trimming are dropped. Kept lines are returned
// unchanged.
std::vector<std::string> dedup_lines(std::span<const std::string> lines);

std::vector<std::string> transliterate_lines(
    std::span<const std::string> lines,
    const translit::Transliterator& transliterator, unsigned jobs = 1);

}  // namespace unseen::corpus

#endif  // UNSEEN_RAW_TEXT_HPP_
