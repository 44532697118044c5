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

#include "segdisc/errors.h"

#include <cstdio>
#include <string>

namespace segdisc {
namespace {

std::string LinePrefix(std::optional<std::size_t> line) {
  return line ? "line " + std::to_string(*line) + ": " : std::string();
}

std::string Printable(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u >= 0x20 && u < 0x7f) return std::string("'") + c + "'";
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%02x", u);
  return buf;
}

}  // namespace

UnknownPhoneme::UnknownPhoneme(char symbol, std::size_t position,
                               std::optional<std::size_t> line)
    : Error(LinePrefix(line) + "unknown phoneme " + Printable(symbol) +
            " at position " + std::to_string(position)),
      symbol_(symbol),
      position_(position),
      line_(line) {}

EmptyToken::EmptyToken(std::size_t position, std::optional<std::size_t> line)
    : Error(LinePrefix(line) + "empty word at position " +
            std::to_string(position)),
      position_(position) {}

EmptyUtterance::EmptyUtterance(std::optional<std::size_t> line)
    : Error(LinePrefix(line) + "empty utterance") {}

InfeasibleBoundaryCount::InfeasibleBoundaryCount(std::size_t requested,
                                                 std::size_t available)
    : Error("cannot place " + std::to_string(requested) +
            " boundaries in an utterance with " + std::to_string(available) +
            " internal positions") {}

}  // namespace segdisc
