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

#ifndef SEGDISC_TABLES_H_
#define SEGDISC_TABLES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "segdisc/phoneme.h"

namespace segdisc {

using WordId = std::uint32_t;
using Count = std::uint64_t;

// How the phoneme frequencies evolve as segmentations are committed.
enum class PhonemeMode {
  kUniform,  // never updated
  kLexicon,  // spelling of each word is counted once, when it is first seen
  kSpeech,   // spelling of every word token is counted
};

std::string_view PhonemeModeName(PhonemeMode mode);
// Throws ConfigError.
PhonemeMode ParsePhonemeMode(std::string_view name);

// Distinct-key counts and count sums of the three n-gram tables.
struct TableStats {
  Count n1 = 0, n2 = 0, n3 = 0;
  Count s1 = 0, s2 = 0, s3 = 0;

  bool operator==(const TableStats&) const = default;
};

// Lexicon (unigram table), bigram and trigram tables and the phoneme table,
// with N_k / S_k aggregates maintained incrementally. N-grams are counted
// within an utterance only.
//
// Words are interned on first commit; a WordId therefore always refers to a
// word with positive unigram count.
class CountTables {
 public:
  // Empty n-gram tables; every phoneme and the sentinel start with a
  // pseudo-count of one.
  CountTables();

  void Commit(std::span<const Word> segmentation, PhonemeMode mode);

  std::optional<WordId> Find(std::string_view word) const;
  const std::string& Spelling(WordId id) const { return spellings_[id]; }
  std::size_t LexiconSize() const { return spellings_.size(); }

  Count Unigram(WordId w) const { return unigrams_[w]; }
  Count Unigram(std::string_view word) const;
  Count Bigram(WordId a, WordId b) const;
  Count Trigram(WordId a, WordId b, WordId c) const;

  // Index in [0, PhonemeInventory::kEventCount); kSentinel for the sentinel.
  Count PhonemeCount(std::size_t index) const { return phonemes_[index]; }
  Count PhonemeTotal() const { return phoneme_total_; }

  const TableStats& stats() const { return stats_; }

  // Recomputes the aggregates from the raw maps.
  TableStats RecomputeStats() const;

  // Debug dump, one `kind<TAB>key<TAB>count` line per entry, sorted.
  void Dump(std::ostream& out) const;

 private:
  struct TrigramKey {
    WordId a, b, c;
    bool operator==(const TrigramKey&) const = default;
  };
  struct TrigramHash {
    std::size_t operator()(const TrigramKey& k) const noexcept {
      std::uint64_t h = k.a;
      h = h * 0x9E3779B97F4A7C15ULL + k.b;
      h = h * 0x9E3779B97F4A7C15ULL + k.c;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };
  static std::uint64_t BigramKey(WordId a, WordId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  void AddSpelling(std::string_view word);

  std::unordered_map<std::string, WordId> ids_;
  std::vector<std::string> spellings_;
  std::vector<Count> unigrams_;
  std::unordered_map<std::uint64_t, Count> bigrams_;
  std::unordered_map<TrigramKey, Count, TrigramHash> trigrams_;
  std::array<Count, PhonemeInventory::kEventCount> phonemes_{};
  Count phoneme_total_ = 0;
  TableStats stats_;
};

}  // namespace segdisc

#endif  // SEGDISC_TABLES_H_
