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

#include "segdisc/segmenter.h"

#include <algorithm>
#include <limits>

#include "segdisc/errors.h"
#include "segdisc/estimator.h"

namespace segdisc {

Segmentation::Segmentation(std::string phonemes, std::vector<std::size_t> boundaries)
    : phonemes_(std::move(phonemes)), boundaries_(std::move(boundaries)) {
  std::size_t prev = 0;
  for (std::size_t b : boundaries_) {
    if (b <= prev || b >= phonemes_.size()) {
      throw ConfigError("invalid word boundary " + std::to_string(b) +
                        " in utterance of length " +
                        std::to_string(phonemes_.size()));
    }
    prev = b;
  }
}

Segmentation Segmentation::FromWords(std::span<const Word> words) {
  std::string phonemes;
  std::vector<std::size_t> boundaries;
  for (const Word& w : words) {
    if (!phonemes.empty()) boundaries.push_back(phonemes.size());
    phonemes += w.phonemes();
  }
  return Segmentation(std::move(phonemes), std::move(boundaries));
}

std::vector<std::string_view> Segmentation::WordViews() const {
  std::vector<std::string_view> out;
  std::string_view all = phonemes_;
  std::size_t start = 0;
  for (std::size_t b : boundaries_) {
    out.push_back(all.substr(start, b - start));
    start = b;
  }
  out.push_back(all.substr(start));
  return out;
}

std::vector<Word> Segmentation::Words() const {
  std::vector<Word> out;
  for (std::string_view v : WordViews()) out.emplace_back(std::string(v));
  return out;
}

std::string Segmentation::ToString() const {
  std::string out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < phonemes_.size(); ++i) {
    if (next < boundaries_.size() && boundaries_[next] == i) {
      out.push_back(' ');
      ++next;
    }
    out.push_back(phonemes_[i]);
  }
  return out;
}

void LearnerConfig::Validate() const {
  if (order < 1 || order > 3) {
    throw ConfigError("model order must be 1, 2 or 3 (got " +
                      std::to_string(order) + ")");
  }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool Improves(double candidate, double incumbent) {
  return candidate < incumbent - kTieTolerance;
}

// Per-span data shared by all model orders: lexicon lookups and unigram
// costs of every substring u[i, j).
class SpanTable {
 public:
  SpanTable(const Scorer& scorer, std::string_view u, bool require_vowel)
      : scorer_(scorer), n_(u.size()), refs_((n_ + 1) * (n_ + 1)),
        unigram_((n_ + 1) * (n_ + 1), kInf), allowed_((n_ + 1) * (n_ + 1)) {
    std::vector<std::size_t> vowels(n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      vowels[i + 1] = vowels[i] + (IsVowelBearing(u.substr(i, 1)) ? 1 : 0);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j <= n_; ++j) {
        std::size_t at = Index(i, j);
        refs_[at] = scorer.Resolve(u.substr(i, j - i));
        allowed_[at] = !require_vowel || vowels[j] > vowels[i];
        if (allowed_[at]) unigram_[at] = scorer.Unigram(refs_[at]);
      }
    }
  }

  const WordRef& Ref(std::size_t i, std::size_t j) const { return refs_[Index(i, j)]; }
  double Unigram(std::size_t i, std::size_t j) const { return unigram_[Index(i, j)]; }

  // Cost of [j, i) following [k, j).
  double Bigram(std::size_t k, std::size_t j, std::size_t i) const {
    if (!allowed_[Index(j, i)]) return kInf;
    return scorer_.Bigram(Ref(k, j), Ref(j, i), Unigram(j, i));
  }

  // Cost of [j, i) following [m, k) [k, j); `bigram` is Bigram(k, j, i).
  double Trigram(std::size_t m, std::size_t k, std::size_t j, std::size_t i,
                 double bigram) const {
    if (!allowed_[Index(j, i)]) return kInf;
    return scorer_.Trigram(Ref(m, k), Ref(k, j), Ref(j, i), bigram);
  }

 private:
  std::size_t Index(std::size_t i, std::size_t j) const { return i * (n_ + 1) + j; }

  const Scorer& scorer_;
  std::size_t n_;
  std::vector<WordRef> refs_;
  std::vector<double> unigram_;
  std::vector<char> allowed_;
};

SegmentResult Finish(std::string_view u, std::vector<std::size_t> boundaries,
                     double score) {
  std::sort(boundaries.begin(), boundaries.end());
  return {Segmentation(std::string(u), std::move(boundaries)), score};
}

// best[i]: prefix u[0, i); back[i]: start of its last word.
SegmentResult SegmentUnigram(const SpanTable& spans, std::string_view u) {
  const std::size_t n = u.size();
  std::vector<double> best(n + 1, kInf);
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    best[i] = spans.Unigram(0, i);
    for (std::size_t j = 1; j < i; ++j) {
      double score = best[j] + spans.Unigram(j, i);
      if (Improves(score, best[i])) {
        best[i] = score;
        back[i] = j;
      }
    }
  }
  std::vector<std::size_t> boundaries;
  for (std::size_t i = n; back[i] > 0; i = back[i]) boundaries.push_back(back[i]);
  return Finish(u, std::move(boundaries), best[n]);
}

// State (j, i): prefix u[0, i) whose last word is u[j, i).
SegmentResult SegmentBigram(const SpanTable& spans, std::string_view u) {
  const std::size_t n = u.size();
  const std::size_t w = n + 1;
  std::vector<double> best(w * w, kInf);
  std::vector<std::size_t> back(w * w, 0);
  auto at = [w](std::size_t j, std::size_t i) { return j * w + i; };

  for (std::size_t i = 1; i <= n; ++i) {
    best[at(0, i)] = spans.Unigram(0, i);
    for (std::size_t j = 1; j < i; ++j) {
      double& cell = best[at(j, i)];
      for (std::size_t k = 0; k < j; ++k) {
        double score = best[at(k, j)] + spans.Bigram(k, j, i);
        if (Improves(score, cell)) {
          cell = score;
          back[at(j, i)] = k;
        }
      }
    }
  }

  std::size_t last = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (Improves(best[at(j, n)], best[at(last, n)])) last = j;
  }
  const double score = best[at(last, n)];
  std::vector<std::size_t> boundaries;
  for (std::size_t j = last, i = n; j > 0;) {
    boundaries.push_back(j);
    std::size_t k = back[at(j, i)];
    i = j;
    j = k;
  }
  return Finish(u, std::move(boundaries), score);
}

// State (k, j, i): prefix u[0, i) ending in the words u[k, j) u[j, i).
// Single-word prefixes are scored directly from the span table.
SegmentResult SegmentTrigram(const SpanTable& spans, std::string_view u) {
  const std::size_t n = u.size();
  const std::size_t w = n + 1;
  std::vector<double> best(w * w * w, kInf);
  std::vector<std::size_t> back(w * w * w, 0);
  auto at = [w](std::size_t k, std::size_t j, std::size_t i) {
    return (k * w + j) * w + i;
  };

  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      best[at(0, j, i)] = spans.Unigram(0, j) + spans.Bigram(0, j, i);
      for (std::size_t k = 1; k < j; ++k) {
        const double bigram = spans.Bigram(k, j, i);
        double& cell = best[at(k, j, i)];
        for (std::size_t m = 0; m < k; ++m) {
          double score = best[at(m, k, j)] + spans.Trigram(m, k, j, i, bigram);
          if (Improves(score, cell)) {
            cell = score;
            back[at(k, j, i)] = m;
          }
        }
      }
    }
  }

  double score = spans.Unigram(0, n);
  std::size_t last_k = 0, last_j = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      if (Improves(best[at(k, j, n)], score)) {
        score = best[at(k, j, n)];
        last_k = k;
        last_j = j;
      }
    }
  }
  std::vector<std::size_t> boundaries;
  if (last_j > 0) {
    boundaries.push_back(last_j);
    for (std::size_t k = last_k, j = last_j, i = n; k > 0;) {
      boundaries.push_back(k);
      std::size_t m = back[at(k, j, i)];
      i = j;
      j = k;
      k = m;
    }
  }
  return Finish(u, std::move(boundaries), score);
}

}  // namespace

SegmentResult Segment(const CountTables& tables, std::string_view phonemes,
                      const LearnerConfig& config) {
  config.Validate();
  if (phonemes.empty()) throw EmptyUtterance();
  ValidatePhonemes(phonemes);

  Scorer scorer(tables);
  bool require_vowel = config.require_vowel;
  if (require_vowel && !IsVowelBearing(phonemes)) {
    return {Segmentation(std::string(phonemes), {}),
            scorer.Unigram(scorer.Resolve(phonemes))};
  }
  SpanTable spans(scorer, phonemes, require_vowel);
  switch (config.order) {
    case 1: return SegmentUnigram(spans, phonemes);
    case 2: return SegmentBigram(spans, phonemes);
    default: return SegmentTrigram(spans, phonemes);
  }
}

Learner::Learner(LearnerConfig config) : config_(config) { config_.Validate(); }

Segmentation Learner::Process(std::string_view phonemes) {
  SegmentResult result = Segment(tables_, phonemes, config_);
  tables_.Commit(result.segmentation.Words(), config_.phoneme_mode);
  return std::move(result.segmentation);
}

void Learner::Train(std::span<const Word> reference) {
  tables_.Commit(reference, config_.phoneme_mode);
}

}  // namespace segdisc
