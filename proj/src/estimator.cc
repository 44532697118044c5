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

#include "segdisc/estimator.h"

#include <cmath>

namespace segdisc {
namespace {

// -ln(n / (n + s)), with an empty table meaning "no escape cost".
double EscapeCost(Count n, Count s) {
  if (n + s == 0) return 0.0;
  return std::log(static_cast<double>(n + s)) - std::log(static_cast<double>(n));
}

double KeepCost(Count n, Count s) {
  if (s == 0) return 0.0;  // unused: no familiar n-gram exists
  return std::log(static_cast<double>(n + s)) - std::log(static_cast<double>(s));
}

}  // namespace

Scorer::Scorer(const CountTables& tables) : tables_(tables) {
  const double log_total = std::log(static_cast<double>(tables.PhonemeTotal()));
  for (std::size_t i = 0; i < PhonemeInventory::kEventCount; ++i) {
    phoneme_cost_[i] =
        log_total - std::log(static_cast<double>(tables.PhonemeCount(i)));
  }
  const Count end = tables.PhonemeCount(PhonemeInventory::kSentinel);
  // -ln(f(#) / (1 - f(#))) = ln(total - end) - ln(end)
  sigma_base_ = std::log(static_cast<double>(tables.PhonemeTotal() - end)) -
                std::log(static_cast<double>(end));

  const TableStats& s = tables.stats();
  log_total1_ = std::log(static_cast<double>(s.n1 + s.s1));
  escape1_ = EscapeCost(s.n1, s.s1);
  escape2_ = EscapeCost(s.n2, s.s2);
  escape3_ = EscapeCost(s.n3, s.s3);
  keep2_ = KeepCost(s.n2, s.s2);
  keep3_ = KeepCost(s.n3, s.s3);
}

double Scorer::Sigma(std::string_view w) const {
  const auto& inv = PhonemeInventory::Standard();
  double score = sigma_base_;
  for (char c : w) score += phoneme_cost_[inv.IndexOf(c)];
  return score;
}

double Scorer::Unigram(const WordRef& w) const {
  if (w.id) {
    return log_total1_ - std::log(static_cast<double>(tables_.Unigram(*w.id)));
  }
  return escape1_ + Sigma(w.spelling);
}

double Scorer::Bigram(const WordRef& prev, const WordRef& w, double unigram) const {
  if (prev.id && w.id) {
    if (Count c = tables_.Bigram(*prev.id, *w.id); c > 0) {
      return keep2_ - std::log(static_cast<double>(c)) +
             std::log(static_cast<double>(tables_.Unigram(*prev.id)));
    }
  }
  return escape2_ + unigram;
}

double Scorer::Trigram(const WordRef& w2, const WordRef& w1, const WordRef& w,
                       double bigram) const {
  if (w2.id && w1.id && w.id) {
    if (Count c = tables_.Trigram(*w2.id, *w1.id, *w.id); c > 0) {
      return keep3_ - std::log(static_cast<double>(c)) +
             std::log(static_cast<double>(tables_.Bigram(*w2.id, *w1.id)));
    }
  }
  return escape3_ + bigram;
}

double WordScore(const CountTables& t, std::span<const std::string_view> context,
                 std::string_view w, int order) {
  Scorer scorer(t);
  std::size_t usable = std::min<std::size_t>(context.size(), order - 1);
  WordRef target = scorer.Resolve(w);
  if (usable >= 2) {
    return scorer.Trigram(scorer.Resolve(context[context.size() - 2]),
                          scorer.Resolve(context.back()), target);
  }
  if (usable == 1) return scorer.Bigram(scorer.Resolve(context.back()), target);
  return scorer.Unigram(target);
}

}  // namespace segdisc
