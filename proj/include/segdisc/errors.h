// Copyright 2026 The segdisc Authors.
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

#ifndef SEGDISC_ERRORS_H_
#define SEGDISC_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace segdisc {

// Base for every recoverable error raised by the library. The CLI maps these
// to exit code 1; anything else escaping main is treated as an internal
// failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPhoneme : public Error {
 public:
  UnknownPhoneme(char symbol, std::size_t position,
                 std::optional<std::size_t> line = std::nullopt);

  char symbol() const { return symbol_; }
  std::size_t position() const { return position_; }
  // 1-based line number when raised while loading a corpus file.
  std::optional<std::size_t> line() const { return line_; }

 private:
  char symbol_;
  std::size_t position_;
  std::optional<std::size_t> line_;
};

// Consecutive, leading or trailing spaces in a transcription line.
class EmptyToken : public Error {
 public:
  EmptyToken(std::size_t position, std::optional<std::size_t> line = std::nullopt);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EmptyUtterance : public Error {
 public:
  explicit EmptyUtterance(std::optional<std::size_t> line = std::nullopt);
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class MismatchedUtterance : public Error {
 public:
  using Error::Error;
};

class InfeasibleBoundaryCount : public Error {
 public:
  InfeasibleBoundaryCount(std::size_t requested, std::size_t available);
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace segdisc

#endif  // SEGDISC_ERRORS_H_
