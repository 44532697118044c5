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

#ifndef SEGDISC_ESTIMATOR_H_
#define SEGDISC_ESTIMATOR_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string_view>

#include "segdisc/phoneme.h"
#include "segdisc/tables.h"

namespace segdisc {

// Word and n-gram probabilities with escape-space back-off:
//
//   P(w)          = C(w) / (N1+S1)                              if C(w) > 0
//                 = N1/(N1+S1) * Psigma(w)                      otherwise
//   P(w|a)        = S2/(N2+S2) * C(a,w) / C(a)                  if C(a,w) > 0
//                 = N2/(N2+S2) * P(w)                           otherwise
//   P(w|b,a)      = S3/(N3+S3) * C(b,a,w) / C(b,a)              if C(b,a,w) > 0
//                 = N3/(N3+S3) * P(w|a)                         otherwise
//   Psigma(w)     = f(#) * prod_j f(w[j]) / (1 - f(#))
//
// where f is the relative frequency in the phoneme table and # the sentinel.
// An escape factor whose table is empty (N = S = 0) is taken as 1.
//
// The templates below evaluate these in any field type (double, or an exact
// rational for analysis). The segmenter uses Scorer, which evaluates the same
// formulas as negative natural logs.

namespace internal {

template <typename Real>
Real Ratio(Count num, Count den) {
  return Real(num) / Real(den);
}

template <typename Real>
Real EscapeFactor(Count n, Count s) {
  return n + s == 0 ? Real(1) : Ratio<Real>(n, n + s);
}

}  // namespace internal

template <typename Real = double>
Real PhonemeFrequency(const CountTables& t, std::size_t index) {
  return internal::Ratio<Real>(t.PhonemeCount(index), t.PhonemeTotal());
}

template <typename Real = double>
Real PSigma(const CountTables& t, std::string_view w) {
  const auto& inv = PhonemeInventory::Standard();
  Real end = PhonemeFrequency<Real>(t, PhonemeInventory::kSentinel);
  Real p = end;
  for (char c : w) p *= PhonemeFrequency<Real>(t, inv.IndexOf(c));
  return p / (Real(1) - end);
}

template <typename Real = double>
Real PUnigram(const CountTables& t, std::string_view w) {
  const TableStats& s = t.stats();
  if (Count c = t.Unigram(w); c > 0) return internal::Ratio<Real>(c, s.n1 + s.s1);
  return internal::EscapeFactor<Real>(s.n1, s.s1) * PSigma<Real>(t, w);
}

template <typename Real = double>
Real PBigram(const CountTables& t, std::string_view prev, std::string_view w) {
  const TableStats& s = t.stats();
  auto a = t.Find(prev);
  auto b = t.Find(w);
  if (a && b) {
    if (Count c = t.Bigram(*a, *b); c > 0) {
      return internal::Ratio<Real>(s.s2, s.n2 + s.s2) *
             internal::Ratio<Real>(c, t.Unigram(*a));
    }
  }
  return internal::EscapeFactor<Real>(s.n2, s.s2) * PUnigram<Real>(t, w);
}

template <typename Real = double>
Real PTrigram(const CountTables& t, std::string_view w2, std::string_view w1,
              std::string_view w) {
  const TableStats& s = t.stats();
  auto a = t.Find(w2);
  auto b = t.Find(w1);
  auto c = t.Find(w);
  if (a && b && c) {
    if (Count n = t.Trigram(*a, *b, *c); n > 0) {
      return internal::Ratio<Real>(s.s3, s.n3 + s.s3) *
             internal::Ratio<Real>(n, t.Bigram(*a, *b));
    }
  }
  return internal::EscapeFactor<Real>(s.n3, s.s3) * PBigram<Real>(t, w1, w);
}

// Probability of `w` given up to order-1 preceding words of the same
// utterance (oldest first). Utterance-initial words fall back to the
// lower-order formula.
template <typename Real = double>
Real PWord(const CountTables& t, std::span<const std::string_view> context,
           std::string_view w, int order) {
  std::size_t usable = std::min<std::size_t>(context.size(), order - 1);
  if (usable >= 2) {
    return PTrigram<Real>(t, context[context.size() - 2], context.back(), w);
  }
  if (usable == 1) return PBigram<Real>(t, context.back(), w);
  return PUnigram<Real>(t, w);
}

// Probability of a whole utterance's word string under the order-`order`
// model.
template <typename Real = double>
Real PWordString(const CountTables& t, std::span<const std::string_view> words,
                 int order) {
  Real p(1);
  for (std::size_t i = 0; i < words.size(); ++i) {
    p *= PWord<Real>(t, words.first(i), words[i], order);
  }
  return p;
}

// A candidate word together with its lexicon id, if it has one.
struct WordRef {
  std::string_view spelling;
  std::optional<WordId> id;
};

// Negative natural-log scores of the formulas above, with the per-table
// constants precomputed. Borrows the tables; must not outlive a commit.
class Scorer {
 public:
  explicit Scorer(const CountTables& tables);

  WordRef Resolve(std::string_view w) const { return {w, tables_.Find(w)}; }

  double Sigma(std::string_view w) const;
  double Unigram(const WordRef& w) const;
  // `unigram` is Unigram(w), which the back-off branch adds on.
  double Bigram(const WordRef& prev, const WordRef& w, double unigram) const;
  double Bigram(const WordRef& prev, const WordRef& w) const {
    return Bigram(prev, w, Unigram(w));
  }
  // `bigram` is Bigram(w1, w).
  double Trigram(const WordRef& w2, const WordRef& w1, const WordRef& w,
                 double bigram) const;
  double Trigram(const WordRef& w2, const WordRef& w1, const WordRef& w) const {
    return Trigram(w2, w1, w, Bigram(w1, w));
  }

  const CountTables& tables() const { return tables_; }

 private:
  const CountTables& tables_;
  std::array<double, PhonemeInventory::kEventCount> phoneme_cost_{};
  double sigma_base_ = 0;
  double log_total1_ = 0;
  double escape1_ = 0, escape2_ = 0, escape3_ = 0;
  double keep2_ = 0, keep3_ = 0;
};

// -ln PWord(...), through Scorer.
double WordScore(const CountTables& t, std::span<const std::string_view> context,
                 std::string_view w, int order);

}  // namespace segdisc

#endif  // SEGDISC_ESTIMATOR_H_
