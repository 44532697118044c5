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

#ifndef SEGDISC_SEGMENTER_H_
#define SEGDISC_SEGMENTER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segdisc/phoneme.h"
#include "segdisc/tables.h"

namespace segdisc {

// An utterance's phoneme string with a set of internal word boundaries.
class Segmentation {
 public:
  Segmentation() = default;
  // Boundaries must be strictly increasing and inside (0, size). Throws
  // ConfigError otherwise.
  Segmentation(std::string phonemes, std::vector<std::size_t> boundaries);
  static Segmentation FromWords(std::span<const Word> words);

  const std::string& phonemes() const { return phonemes_; }
  const std::vector<std::size_t>& boundaries() const { return boundaries_; }
  std::size_t WordCount() const { return boundaries_.size() + 1; }

  std::vector<std::string_view> WordViews() const;
  std::vector<Word> Words() const;
  // Words joined by single spaces.
  std::string ToString() const;

  bool operator==(const Segmentation&) const = default;

 private:
  std::string phonemes_;
  std::vector<std::size_t> boundaries_;
};

struct LearnerConfig {
  int order = 1;  // 1, 2 or 3
  PhonemeMode phoneme_mode = PhonemeMode::kLexicon;
  // Candidate words without a vowel are ruled out (unless the utterance has
  // no vowel at all, in which case it is kept whole).
  bool require_vowel = false;

  // Throws ConfigError.
  void Validate() const;
};

struct SegmentResult {
  Segmentation segmentation;
  double score = 0;  // -ln P of the word string
};

// Candidates whose scores differ by less than this are treated as tied;
// ties keep the earlier-examined candidate.
inline constexpr double kTieTolerance = 1e-9;

// Minimum -ln probability segmentation of `phonemes` under the configured
// n-gram order. Read-only on the tables.
//
// Candidates are examined in a fixed order (the unsplit span first, then
// increasing start position of the last word, then increasing start of the
// word before it) and a later candidate replaces the incumbent only if it is
// strictly better, so exact ties keep the longer final word.
SegmentResult Segment(const CountTables& tables, std::string_view phonemes,
                      const LearnerConfig& config);

// Incremental learner: owns a set of tables and commits every segmentation
// it produces.
class Learner {
 public:
  explicit Learner(LearnerConfig config);

  // Segments and commits.
  Segmentation Process(std::string_view phonemes);
  // Commits a known segmentation without searching.
  void Train(std::span<const Word> reference);

  const CountTables& tables() const { return tables_; }
  const LearnerConfig& config() const { return config_; }

 private:
  LearnerConfig config_;
  CountTables tables_;
};

}  // namespace segdisc

#endif  // SEGDISC_SEGMENTER_H_
