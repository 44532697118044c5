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

#ifndef SEGDISC_PHONEME_H_
#define SEGDISC_PHONEME_H_

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace segdisc {

enum class PhonemeClass { kConsonant, kVowel, kVowelR };

// The fixed ASCII phoneme alphabet used by the phonemic transcriptions, plus
// the reserved end-of-word sentinel. Every phoneme is a single character.
//
// Note that ASCII '#' is an ordinary phoneme (the vowel of "arm"); the
// sentinel is not representable as a character and only exists as the
// index kSentinel in frequency tables.
class PhonemeInventory {
 public:
  static constexpr std::size_t kPhonemeCount = 50;
  // Index of the sentinel; phoneme indices are [0, kPhonemeCount).
  static constexpr std::size_t kSentinel = kPhonemeCount;
  // Size of the event space the phoneme table is defined over.
  static constexpr std::size_t kEventCount = kPhonemeCount + 1;

  // The one inventory used throughout. Immutable.
  static const PhonemeInventory& Standard();

  bool Contains(char symbol) const { return index_[Byte(symbol)] >= 0; }
  // Index in [0, kPhonemeCount), or -1 for characters outside the inventory.
  int IndexOf(char symbol) const { return index_[Byte(symbol)]; }
  char SymbolAt(std::size_t index) const { return symbols_[index]; }
  PhonemeClass ClassOf(char symbol) const;
  bool IsVowelBearing(char symbol) const;

  std::string_view symbols() const { return {symbols_.data(), kPhonemeCount}; }

 private:
  PhonemeInventory();
  static std::size_t Byte(char c) { return static_cast<unsigned char>(c); }

  std::array<char, kPhonemeCount> symbols_{};
  std::array<PhonemeClass, kPhonemeCount> classes_{};
  std::array<int, 256> index_{};
};

// A non-empty sequence of phonemes.
class Word {
 public:
  // Throws UnknownPhoneme or EmptyToken.
  explicit Word(std::string phonemes);

  const std::string& phonemes() const { return phonemes_; }
  std::size_t size() const { return phonemes_.size(); }

  auto operator<=>(const Word&) const = default;

 private:
  std::string phonemes_;
};

// Throws UnknownPhoneme for the first character outside the inventory.
void ValidatePhonemes(std::string_view phonemes);

// Splits one transcription line (words separated by single spaces, an
// optional trailing newline) into words.
std::vector<Word> ParseUtterance(std::string_view line);

std::string JoinWords(const std::vector<Word>& words, char separator = ' ');

// True iff `w` contains a vowel or an r-coloured vowel.
bool IsVowelBearing(std::string_view w);
inline bool IsVowelBearing(const Word& w) { return IsVowelBearing(w.phonemes()); }

}  // namespace segdisc

template <>
struct std::hash<segdisc::Word> {
  std::size_t operator()(const segdisc::Word& w) const noexcept {
    return std::hash<std::string>()(w.phonemes());
  }
};

#endif  // SEGDISC_PHONEME_H_
