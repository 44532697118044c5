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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.h"
#include "segdisc/corpus.h"
#include "segdisc/errors.h"
#include "segdisc/estimator.h"

namespace segdisc {
namespace {

using testing::Exhaustive;
using testing::Rational;

Learner DamnBritishLearner(int x, int order = 1) {
  Learner learner({order, PhonemeMode::kLexicon, false});
  learner.Process("D&mbrItIS");
  learner.Process("D&m");
  learner.Process("D&m");
  for (int i = 0; i < x; ++i) learner.Process("brItIS");
  return learner;
}

TEST(SegmentationTest, Construction) {
  Segmentation s("D&mbrItIS", {3});
  EXPECT_EQ(s.ToString(), "D&m brItIS");
  EXPECT_EQ(s.WordCount(), 2u);
  EXPECT_EQ(Segmentation::FromWords(s.Words()), s);
  EXPECT_THROW(Segmentation("abc", {0}), ConfigError);
  EXPECT_THROW(Segmentation("abc", {3}), ConfigError);
  EXPECT_THROW(Segmentation("abc", {2, 1}), ConfigError);
  EXPECT_EQ(Segmentation("abc", {}).ToString(), "abc");
}

TEST(SegmentTest, DamnBritishSplitsAtSeven) {
  Learner learner = DamnBritishLearner(7);
  SegmentResult r = Segment(learner.tables(), "D&mbrItIS", learner.config());
  EXPECT_EQ(r.segmentation.ToString(), "D&m brItIS");
  EXPECT_NEAR(r.score, 2.49084, 1e-4);
}

TEST(SegmentTest, DamnBritishTieAtSixKeepsWholeWord) {
  Learner learner = DamnBritishLearner(6);
  // P(D&m) P(brItIS) = 2/12 * 6/12 = 1/12 = P(D&mbrItIS).
  const std::string_view split[] = {"D&m", "brItIS"};
  const std::string_view whole[] = {"D&mbrItIS"};
  EXPECT_EQ(PWordString<Rational>(learner.tables(), split, 1),
            PWordString<Rational>(learner.tables(), whole, 1));
  SegmentResult r = Segment(learner.tables(), "D&mbrItIS", learner.config());
  EXPECT_EQ(r.segmentation.ToString(), "D&mbrItIS");
  EXPECT_NEAR(r.score, std::log(12.0), 1e-12);
}

TEST(SegmentTest, SinglePhoneme) {
  CountTables t;
  for (int order = 1; order <= 3; ++order) {
    SegmentResult r = Segment(t, "a", {order, PhonemeMode::kLexicon, false});
    EXPECT_EQ(r.segmentation.ToString(), "a");
  }
}

TEST(SegmentTest, RejectsBadInput) {
  CountTables t;
  EXPECT_THROW(Segment(t, "", {}), EmptyUtterance);
  EXPECT_THROW(Segment(t, "a$", {}), UnknownPhoneme);
  EXPECT_THROW(Segment(t, "a", {4, PhonemeMode::kLexicon, false}), ConfigError);
}

TEST(SegmentTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(101);
  for (int order = 1; order <= 3; ++order) {
    for (int trial = 0; trial < 40; ++trial) {
      auto c = testing::MakeRandomCase(rng, 10);
      LearnerConfig config{order, PhonemeMode::kLexicon, trial % 4 == 0};
      SegmentResult r = Segment(c.tables, c.utterance, config);
      auto oracle = Exhaustive(c.tables, c.utterance, config, true);
      auto words = r.segmentation.WordViews();
      EXPECT_EQ(PWordString<Rational>(c.tables, words, order), oracle.best_probability)
          << "order " << order << " utterance " << c.utterance;
      EXPECT_NEAR(r.score, oracle.best_score, 1e-9);
    }
  }
}

TEST(SegmentTest, ScoreIsSumOfWordScores) {
  std::mt19937_64 rng(103);
  for (int order = 1; order <= 3; ++order) {
    for (int trial = 0; trial < 100; ++trial) {
      auto c = testing::MakeRandomCase(rng, 16);
      LearnerConfig config{order, PhonemeMode::kLexicon, false};
      SegmentResult r = Segment(c.tables, c.utterance, config);
      EXPECT_EQ(r.segmentation.phonemes(), c.utterance);
      EXPECT_EQ(r.score, testing::SequenceScore(c.tables, r.segmentation.WordViews(), order));
      EXPECT_EQ(Segment(c.tables, c.utterance, config).segmentation, r.segmentation);
    }
  }
}

TEST(SegmentTest, VowelConstraint) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = testing::MakeRandomCase(rng, 14);
    LearnerConfig config{1 + static_cast<int>(trial % 3), PhonemeMode::kLexicon, true};
    SegmentResult r = Segment(c.tables, c.utterance, config);
    if (IsVowelBearing(c.utterance)) {
      for (auto w : r.segmentation.WordViews()) EXPECT_TRUE(IsVowelBearing(w)) << w;
    } else {
      EXPECT_EQ(r.segmentation.WordCount(), 1u);
    }
  }
  // A familiar vowel-free word is still ruled out.
  CountTables t;
  t.Commit(std::vector<Word>{Word("st"), Word("a")}, PhonemeMode::kLexicon);
  SegmentResult r = Segment(t, "sta", {1, PhonemeMode::kLexicon, true});
  EXPECT_EQ(r.segmentation.ToString(), "sta");
  EXPECT_EQ(Segment(t, "st", {1, PhonemeMode::kLexicon, true}).segmentation.ToString(), "st");
}

TEST(LearnerTest, FirstUtteranceIsOneWord) {
  for (int order = 1; order <= 3; ++order) {
    Learner learner({order, PhonemeMode::kLexicon, false});
    EXPECT_EQ(learner.Process("D&mbrItIS").ToString(), "D&mbrItIS");
    EXPECT_EQ(learner.tables().Unigram("D&mbrItIS"), 1u);
  }
}

TEST(LearnerTest, RepeatedUtteranceBecomesFamiliar) {
  Learner learner({1, PhonemeMode::kLexicon, false});
  learner.Process("tu");
  // N1 = 1, S1 = 1: familiar "tu" has probability 1/2.
  SegmentResult r = Segment(learner.tables(), "tu", learner.config());
  EXPECT_EQ(r.segmentation.ToString(), "tu");
  EXPECT_NEAR(r.score, std::log(2.0), 1e-12);
  learner.Process("tu");
  EXPECT_EQ(learner.tables().Unigram("tu"), 2u);
}

TEST(LearnerTest, ProcessesFixture) {
  Corpus c = LoadCorpus(std::string(SEGDISC_TEST_DATA) + "/table1.txt");
  for (int order = 1; order <= 3; ++order) {
    Learner learner({order, PhonemeMode::kLexicon, false});
    for (const auto& u : c.utterances()) {
      EXPECT_EQ(learner.Process(u.raw).phonemes(), u.raw);
    }
    EXPECT_GE(learner.tables().stats().n1, 1u);
  }
}

TEST(LearnerTest, TrainCommitsReference) {
  Learner learner({2, PhonemeMode::kLexicon, false});
  learner.Train(std::vector<Word>{Word("D&m"), Word("brItIS")});
  const auto& t = learner.tables();
  EXPECT_EQ(t.Bigram(*t.Find("D&m"), *t.Find("brItIS")), 1u);
}

}  // namespace
}  // namespace segdisc
