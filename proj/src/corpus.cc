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

#include "segdisc/corpus.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "segdisc/errors.h"
#include "segdisc/random.h"

namespace segdisc {

Utterance Utterance::FromWords(std::vector<Word> words, std::size_t source_index) {
  Utterance u;
  for (const Word& w : words) u.raw += w.phonemes();
  u.reference = std::move(words);
  u.source_index = source_index;
  return u;
}

std::size_t Corpus::CharacterCount() const {
  std::size_t total = 0;
  for (const Utterance& u : utterances_) {
    total += u.raw.size() + u.reference.size();  // spaces + newline
  }
  return total;
}

std::size_t Corpus::WordTokenCount() const {
  std::size_t total = 0;
  for (const Utterance& u : utterances_) total += u.reference.size();
  return total;
}

Corpus Corpus::Doubled() const {
  std::vector<Utterance> twice = utterances_;
  twice.insert(twice.end(), utterances_.begin(), utterances_.end());
  return Corpus(std::move(twice));
}

Corpus ReadCorpus(std::istream& in) {
  std::vector<Utterance> utterances;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      utterances.push_back(Utterance::FromWords(ParseUtterance(line), line_no));
    } catch (const UnknownPhoneme& e) {
      throw UnknownPhoneme(e.symbol(), e.position(), line_no);
    } catch (const EmptyToken& e) {
      throw EmptyToken(e.position(), line_no);
    } catch (const EmptyUtterance&) {
      throw EmptyUtterance(line_no);
    }
  }
  if (in.bad()) throw IoFailure("read error after line " + std::to_string(line_no));
  if (utterances.empty()) throw EmptyUtterance();
  return Corpus(std::move(utterances));
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open corpus " + path.string());
  return ReadCorpus(in);
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  for (const Utterance& u : corpus.utterances()) {
    out << JoinWords(u.reference) << '\n';
  }
}

void SaveCorpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot write " + path.string());
  WriteCorpus(corpus, out);
  if (!out) throw IoFailure("write error on " + path.string());
}

Corpus Permute(const Corpus& corpus, std::uint64_t seed) {
  std::vector<Utterance> order = corpus.utterances();
  Rng rng(seed);
  rng.Shuffle(order);
  return Corpus(std::move(order));
}

std::size_t SplitPlan::TrainCount(std::size_t n) const {
  if (train_fraction <= 0.0) return 0;
  if (train_fraction >= 1.0) return n;
  double exact = train_fraction * static_cast<double>(n);
  auto count = static_cast<std::size_t>(std::floor(exact + 1e-9));
  return count > n ? n : count;
}

std::pair<Corpus, Corpus> Split(const Corpus& corpus, const SplitPlan& plan) {
  const auto& all = corpus.utterances();
  std::size_t k = plan.TrainCount(all.size());
  std::vector<Utterance> train(all.begin(), all.begin() + k);
  std::vector<Utterance> test(all.begin() + k, all.end());
  return {Corpus(std::move(train)), Corpus(std::move(test))};
}

}  // namespace segdisc
