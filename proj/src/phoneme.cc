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

#include "segdisc/phoneme.h"

#include "segdisc/errors.h"

namespace segdisc {
namespace {

// Consonants, vowels and r-coloured vowels of the transcription alphabet.
// Lowercase 'w' (as in "want") is used throughout the transcriptions and is
// listed with the consonants.
constexpr std::string_view kConsonants = "pbmtdnkgNfvTDszSZhcGlrywWLM~";
constexpr std::string_view kVowels = "IE&AaOU6ieuo9Q7";
constexpr std::string_view kVowelsR = "3R#%*()";

static_assert(kConsonants.size() + kVowels.size() + kVowelsR.size() ==
              PhonemeInventory::kPhonemeCount);

}  // namespace

PhonemeInventory::PhonemeInventory() {
  index_.fill(-1);
  std::size_t next = 0;
  auto add = [&](std::string_view group, PhonemeClass cls) {
    for (char c : group) {
      symbols_[next] = c;
      classes_[next] = cls;
      index_[Byte(c)] = static_cast<int>(next);
      ++next;
    }
  };
  add(kConsonants, PhonemeClass::kConsonant);
  add(kVowels, PhonemeClass::kVowel);
  add(kVowelsR, PhonemeClass::kVowelR);
}

const PhonemeInventory& PhonemeInventory::Standard() {
  static const PhonemeInventory inventory;
  return inventory;
}

PhonemeClass PhonemeInventory::ClassOf(char symbol) const {
  int i = IndexOf(symbol);
  if (i < 0) throw UnknownPhoneme(symbol, 0);
  return classes_[i];
}

bool PhonemeInventory::IsVowelBearing(char symbol) const {
  int i = IndexOf(symbol);
  return i >= 0 && classes_[i] != PhonemeClass::kConsonant;
}

void ValidatePhonemes(std::string_view phonemes) {
  const auto& inv = PhonemeInventory::Standard();
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    if (!inv.Contains(phonemes[i])) throw UnknownPhoneme(phonemes[i], i);
  }
}

Word::Word(std::string phonemes) : phonemes_(std::move(phonemes)) {
  if (phonemes_.empty()) throw EmptyToken(0);
  ValidatePhonemes(phonemes_);
}

std::vector<Word> ParseUtterance(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (line.empty()) throw EmptyUtterance();

  const auto& inv = PhonemeInventory::Standard();
  std::vector<Word> words;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ' ') {
      if (i == start) throw EmptyToken(i);
      words.emplace_back(std::string(line.substr(start, i - start)));
      start = i + 1;
    } else if (!inv.Contains(line[i])) {
      throw UnknownPhoneme(line[i], i);
    }
  }
  return words;
}

std::string JoinWords(const std::vector<Word>& words, char separator) {
  std::string out;
  for (const Word& w : words) {
    if (!out.empty()) out.push_back(separator);
    out += w.phonemes();
  }
  return out;
}

bool IsVowelBearing(std::string_view w) {
  const auto& inv = PhonemeInventory::Standard();
  for (char c : w) {
    if (inv.IsVowelBearing(c)) return true;
  }
  return false;
}

}  // namespace segdisc
