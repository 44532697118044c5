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

#ifndef SEGDISC_EVALUATION_H_
#define SEGDISC_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "segdisc/phoneme.h"
#include "segdisc/random.h"
#include "segdisc/segmenter.h"

namespace segdisc {

struct TokenCounts {
  std::size_t correct = 0;
  std::size_t predicted = 0;
  std::size_t reference = 0;

  TokenCounts& operator+=(const TokenCounts& o) {
    correct += o.correct;
    predicted += o.predicted;
    reference += o.reference;
    return *this;
  }
  bool operator==(const TokenCounts&) const = default;
};

// A predicted token is correct iff its span [start, end) is also a span of
// the reference segmentation. Throws MismatchedUtterance if the two disagree
// on the phoneme string.
TokenCounts ScoreUtterance(const Segmentation& predicted,
                           std::span<const Word> reference);

double Precision(const TokenCounts& c);  // percent; 0 when nothing predicted
double Recall(const TokenCounts& c);     // percent; 0 when nothing expected

struct ScoredUtterance {
  Segmentation predicted;
  std::vector<Word> reference;
};

// Which words count as genuine when scoring the learned lexicon.
enum class ReferenceLexicon {
  kFull,  // every word of the full reference corpus
  kSeen,  // words of the reference utterances scored so far
};

struct BlockScores {
  std::size_t block_index = 0;
  std::size_t utterances = 0;
  bool partial = false;  // the final block holds fewer than block_size
  TokenCounts tokens;
  double precision = 0;
  double recall = 0;
  // Cumulative: learned words so far that are genuine, as a percentage of all
  // learned words so far.
  double lexicon_precision = 0;
};

struct LexiconAudit {
  std::size_t correct = 0;
  std::size_t incorrect = 0;
};

struct BlockScoringOptions {
  std::size_t block_size = 500;  // 0 scores the whole stream as one block
  ReferenceLexicon lexicon_mode = ReferenceLexicon::kFull;
  // Genuine words for kFull.
  const std::unordered_set<std::string>* reference_lexicon = nullptr;
  // Words already known before the stream (e.g. from supervised training).
  const std::unordered_set<std::string>* initial_lexicon = nullptr;
};

std::vector<BlockScores> ScoreBlocks(std::span<const ScoredUtterance> stream,
                                     const BlockScoringOptions& options);

LexiconAudit AuditLexicon(const std::unordered_set<std::string>& learned,
                          const std::unordered_set<std::string>& reference);

// Exactly `boundary_count` boundaries drawn uniformly without replacement
// from the internal positions of `phonemes`.
Segmentation RandomSegmentation(std::string_view phonemes,
                                std::size_t boundary_count, Rng& rng);

}  // namespace segdisc

#endif  // SEGDISC_EVALUATION_H_
