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

#ifndef SEGDISC_CORPUS_H_
#define SEGDISC_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "segdisc/phoneme.h"

namespace segdisc {

// One line of a corpus: the reference segmentation and the unsegmented
// phoneme string the learner actually sees.
struct Utterance {
  std::vector<Word> reference;
  std::string raw;
  // 1-based line number in the source file; preserved across permutations
  // so reports can refer back to the original corpus order.
  std::size_t source_index = 0;

  static Utterance FromWords(std::vector<Word> words, std::size_t source_index);

  bool operator==(const Utterance&) const = default;
};

class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Utterance> utterances)
      : utterances_(std::move(utterances)) {}

  const std::vector<Utterance>& utterances() const { return utterances_; }
  std::size_t size() const { return utterances_.size(); }
  bool empty() const { return utterances_.empty(); }
  const Utterance& operator[](std::size_t i) const { return utterances_[i]; }

  // Characters of the file form: one space between words and one newline
  // per utterance.
  std::size_t CharacterCount() const;
  std::size_t WordTokenCount() const;

  // Corpus followed by a second copy of itself (source indices repeat).
  Corpus Doubled() const;

  bool operator==(const Corpus&) const = default;

 private:
  std::vector<Utterance> utterances_;
};

// Reads one utterance per line. Empty lines are rejected. Parse errors carry
// the offending line number.
Corpus ReadCorpus(std::istream& in);
Corpus LoadCorpus(const std::filesystem::path& path);

void WriteCorpus(const Corpus& corpus, std::ostream& out);
void SaveCorpus(const Corpus& corpus, const std::filesystem::path& path);

// Deterministic Fisher-Yates shuffle of utterance order.
Corpus Permute(const Corpus& corpus, std::uint64_t seed);

struct SplitPlan {
  double train_fraction = 0.0;  // in [0, 1]
  std::uint64_t seed = 0;
  int runs = 1;

  // floor(train_fraction * n), guarded against representation error so that
  // e.g. 0.29 * 100 yields 29.
  std::size_t TrainCount(std::size_t n) const;
};

// First TrainCount(n) utterances train, the rest test.
std::pair<Corpus, Corpus> Split(const Corpus& corpus, const SplitPlan& plan);

}  // namespace segdisc

#endif  // SEGDISC_CORPUS_H_
