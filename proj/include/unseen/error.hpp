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

#ifndef UNSEEN_ERROR_HPP_
#define UNSEEN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unseen {

// Base class of every error raised by the library. The command line tool maps
// all of these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes are not well-formed UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// An error tied to a line of an input file. what() is prefixed with
// "line N: ".
class LineError : public Error {
 public:
  LineError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Malformed line (wrong column count, bad id, bad field).
class ParseError : public LineError {
 public:
  using LineError::LineError;
};

// Well-formed lines that do not assemble into a valid structure
// (non-contiguous ids, head out of range, overlapping ranges).
class StructureError : public LineError {
 public:
  using LineError::LineError;
};

// A file is missing a required part, e.g. a rule file without its header.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Annotation violates a labelling scheme (strict IOB2).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, std::size_t sentence)
      : Error("sentence " + std::to_string(sentence) + ": " + message),
        sentence_(sentence) {}

  // 1-based index of the offending sentence.
  std::size_t sentence() const { return sentence_; }

 private:
  std::size_t sentence_;
};

// A precondition of an operation was not met by its caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

// Gold and predicted corpora do not line up.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace unseen

#endif  // UNSEEN_ERROR_HPP_
