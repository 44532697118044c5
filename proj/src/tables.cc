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

#include "segdisc/tables.h"

#include <algorithm>
#include <ostream>

#include "segdisc/errors.h"

namespace segdisc {

std::string_view PhonemeModeName(PhonemeMode mode) {
  switch (mode) {
    case PhonemeMode::kUniform: return "uniform";
    case PhonemeMode::kLexicon: return "lexicon";
    case PhonemeMode::kSpeech: return "speech";
  }
  return "?";
}

PhonemeMode ParsePhonemeMode(std::string_view name) {
  if (name == "uniform") return PhonemeMode::kUniform;
  if (name == "lexicon") return PhonemeMode::kLexicon;
  if (name == "speech") return PhonemeMode::kSpeech;
  throw ConfigError("unknown phoneme mode '" + std::string(name) + "'");
}

CountTables::CountTables() {
  phonemes_.fill(1);
  phoneme_total_ = PhonemeInventory::kEventCount;
}

std::optional<WordId> CountTables::Find(std::string_view word) const {
  // Heterogeneous lookup on unordered_map needs C++20 library support that
  // libstdc++ 11 lacks, hence the temporary.
  auto it = ids_.find(std::string(word));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Count CountTables::Unigram(std::string_view word) const {
  auto id = Find(word);
  return id ? unigrams_[*id] : 0;
}

Count CountTables::Bigram(WordId a, WordId b) const {
  auto it = bigrams_.find(BigramKey(a, b));
  return it == bigrams_.end() ? 0 : it->second;
}

Count CountTables::Trigram(WordId a, WordId b, WordId c) const {
  auto it = trigrams_.find(TrigramKey{a, b, c});
  return it == trigrams_.end() ? 0 : it->second;
}

void CountTables::AddSpelling(std::string_view word) {
  const auto& inv = PhonemeInventory::Standard();
  for (char c : word) ++phonemes_[inv.IndexOf(c)];
  ++phonemes_[PhonemeInventory::kSentinel];
  phoneme_total_ += word.size() + 1;
}

void CountTables::Commit(std::span<const Word> segmentation, PhonemeMode mode) {
  std::vector<WordId> ids;
  ids.reserve(segmentation.size());
  for (const Word& w : segmentation) {
    const std::string& spelling = w.phonemes();
    auto [it, inserted] = ids_.try_emplace(spelling, static_cast<WordId>(spellings_.size()));
    if (inserted) {
      spellings_.push_back(spelling);
      unigrams_.push_back(0);
      ++stats_.n1;
      if (mode == PhonemeMode::kLexicon) AddSpelling(spelling);
    }
    if (mode == PhonemeMode::kSpeech) AddSpelling(spelling);
    ++unigrams_[it->second];
    ++stats_.s1;
    ids.push_back(it->second);
  }
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (++bigrams_[BigramKey(ids[i - 1], ids[i])] == 1) ++stats_.n2;
    ++stats_.s2;
  }
  for (std::size_t i = 2; i < ids.size(); ++i) {
    if (++trigrams_[TrigramKey{ids[i - 2], ids[i - 1], ids[i]}] == 1) ++stats_.n3;
    ++stats_.s3;
  }
}

TableStats CountTables::RecomputeStats() const {
  TableStats s;
  for (Count c : unigrams_) {
    if (c > 0) ++s.n1;
    s.s1 += c;
  }
  for (const auto& [key, c] : bigrams_) {
    if (c > 0) ++s.n2;
    s.s2 += c;
  }
  for (const auto& [key, c] : trigrams_) {
    if (c > 0) ++s.n3;
    s.s3 += c;
  }
  return s;
}

void CountTables::Dump(std::ostream& out) const {
  std::vector<std::string> lines;
  const auto& inv = PhonemeInventory::Standard();
  for (std::size_t i = 0; i < PhonemeInventory::kEventCount; ++i) {
    std::string key = i == PhonemeInventory::kSentinel
                          ? std::string("<sentinel>")
                          : std::string(1, inv.SymbolAt(i));
    lines.push_back("phoneme\t" + key + "\t" + std::to_string(phonemes_[i]));
  }
  for (std::size_t i = 0; i < spellings_.size(); ++i) {
    lines.push_back("unigram\t" + spellings_[i] + "\t" + std::to_string(unigrams_[i]));
  }
  for (const auto& [key, c] : bigrams_) {
    lines.push_back("bigram\t" + spellings_[key >> 32] + " " +
                    spellings_[key & 0xffffffffu] + "\t" + std::to_string(c));
  }
  for (const auto& [key, c] : trigrams_) {
    lines.push_back("trigram\t" + spellings_[key.a] + " " + spellings_[key.b] +
                    " " + spellings_[key.c] + "\t" + std::to_string(c));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';
}

}  // namespace segdisc
