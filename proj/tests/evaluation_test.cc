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

#include "segdisc/evaluation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "segdisc/errors.h"

namespace segdisc {
namespace {

Segmentation Seg(const std::string& spaced) {
  return Segmentation::FromWords(ParseUtterance(spaced));
}

ScoredUtterance Scored(const std::string& predicted, const std::string& reference) {
  return {Seg(predicted), ParseUtterance(reference)};
}

TEST(ScoreUtteranceTest, Examples) {
  auto ref = ParseUtterance("yu want D6 dOghQs");
  EXPECT_EQ(ScoreUtterance(Seg("yu want D6 dOghQs"), ref), (TokenCounts{4, 4, 4}));

  TokenCounts c = ScoreUtterance(Seg("yu want D6 dOg hQs"), ref);
  EXPECT_EQ(c, (TokenCounts{3, 5, 4}));
  EXPECT_DOUBLE_EQ(Precision(c), 60.0);
  EXPECT_DOUBLE_EQ(Recall(c), 75.0);

  EXPECT_EQ(ScoreUtterance(Seg("D&mbrItIS"), ParseUtterance("D&m brItIS")),
            (TokenCounts{0, 1, 2}));
  EXPECT_THROW(ScoreUtterance(Seg("D&m"), ParseUtterance("D&n")), MismatchedUtterance);
}

TEST(ScoreUtteranceTest, CorrectNeverExceedsEitherCount) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 12;
    std::string phonemes(n, 'a');
    std::vector<std::size_t> pb, rb;
    for (std::size_t i = 1; i < n; ++i) {
      if (rng() % 2) pb.push_back(i);
      if (rng() % 2) rb.push_back(i);
    }
    Segmentation predicted(phonemes, pb);
    TokenCounts c = ScoreUtterance(predicted, Segmentation(phonemes, rb).Words());
    EXPECT_LE(c.correct, std::min(c.predicted, c.reference));
    EXPECT_EQ(c.predicted, pb.size() + 1);
    EXPECT_EQ(c.reference, rb.size() + 1);
    // Brute-force span matching.
    auto spans = [&](const std::vector<std::size_t>& b) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      std::size_t start = 0;
      for (std::size_t x : b) {
        out.emplace_back(start, x);
        start = x;
      }
      out.emplace_back(start, n);
      return out;
    };
    auto ps = spans(pb), rs = spans(rb);
    std::size_t expected = 0;
    for (auto& s : ps) expected += std::count(rs.begin(), rs.end(), s);
    EXPECT_EQ(c.correct, expected);
  }
}

TEST(ScoreBlocksTest, AllCorrect) {
  std::vector<ScoredUtterance> stream = {Scored("a b", "a b"), Scored("tu", "tu")};
  auto blocks = ScoreBlocks(stream, {.block_size = 10});
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_DOUBLE_EQ(blocks[0].precision, 100.0);
  EXPECT_DOUBLE_EQ(blocks[0].recall, 100.0);
  EXPECT_TRUE(blocks[0].partial);
}

TEST(ScoreBlocksTest, BlockCountAndPartialFlag) {
  std::vector<ScoredUtterance> stream(9790, Scored("a", "a"));
  auto blocks = ScoreBlocks(stream, {.block_size = 500});
  ASSERT_EQ(blocks.size(), 20u);
  EXPECT_FALSE(blocks[18].partial);
  EXPECT_TRUE(blocks[19].partial);
  EXPECT_EQ(blocks[19].utterances, 290u);
  auto whole = ScoreBlocks(stream, {.block_size = 0});
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0].utterances, 9790u);
}

TEST(ScoreBlocksTest, OrderWithinBlockDoesNotMatter) {
  std::mt19937_64 rng(9);
  std::vector<ScoredUtterance> stream;
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + rng() % 8;
    std::string phonemes(n, 'k');
    std::vector<std::size_t> pb, rb;
    for (std::size_t j = 1; j < n; ++j) {
      if (rng() % 2) pb.push_back(j);
      if (rng() % 3 == 0) rb.push_back(j);
    }
    stream.push_back({Segmentation(phonemes, pb), Segmentation(phonemes, rb).Words()});
  }
  auto base = ScoreBlocks(stream, {.block_size = 10});
  for (int trial = 0; trial < 20; ++trial) {
    auto shuffled = stream;
    for (std::size_t b = 0; b < shuffled.size(); b += 10) {
      std::shuffle(shuffled.begin() + b, shuffled.begin() + b + 10, rng);
    }
    auto again = ScoreBlocks(shuffled, {.block_size = 10});
    ASSERT_EQ(again.size(), base.size());
    for (std::size_t b = 0; b < base.size(); ++b) {
      EXPECT_DOUBLE_EQ(again[b].precision, base[b].precision);
      EXPECT_DOUBLE_EQ(again[b].recall, base[b].recall);
      EXPECT_DOUBLE_EQ(again[b].lexicon_precision, base[b].lexicon_precision);
    }
  }
}

TEST(ScoreBlocksTest, LexiconPrecisionIsCumulative) {
  std::unordered_set<std::string> reference = {"a", "b", "kat"};
  std::vector<ScoredUtterance> stream = {Scored("a kat", "a kat"), Scored("ab", "a b"),
                                         Scored("a b", "a b")};
  auto blocks = ScoreBlocks(stream, {.block_size = 1, .reference_lexicon = &reference});
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_DOUBLE_EQ(blocks[0].lexicon_precision, 100.0);
  EXPECT_NEAR(blocks[1].lexicon_precision, 200.0 / 3, 1e-12);  // {a, kat, ab}
  EXPECT_DOUBLE_EQ(blocks[2].lexicon_precision, 75.0);         // + b
}

TEST(ScoreBlocksTest, SeenReferenceLexicon) {
  std::vector<ScoredUtterance> stream = {Scored("a b", "ab"), Scored("ab", "ab"),
                                         Scored("a b", "a b")};
  auto blocks = ScoreBlocks(stream, {.block_size = 1,
                                     .lexicon_mode = ReferenceLexicon::kSeen});
  EXPECT_DOUBLE_EQ(blocks[0].lexicon_precision, 0.0);        // {a, b} vs {ab}
  EXPECT_NEAR(blocks[1].lexicon_precision, 100.0 / 3, 1e-12);  // {a, b, ab}
  EXPECT_DOUBLE_EQ(blocks[2].lexicon_precision, 100.0);      // ref now {ab, a, b}
}

TEST(ScoreBlocksTest, InitialLexiconCounts) {
  std::unordered_set<std::string> reference = {"a"};
  std::unordered_set<std::string> initial = {"a", "zz"};
  std::vector<ScoredUtterance> stream = {Scored("a", "a")};
  auto blocks = ScoreBlocks(stream, {.block_size = 0,
                                     .reference_lexicon = &reference,
                                     .initial_lexicon = &initial});
  EXPECT_DOUBLE_EQ(blocks[0].lexicon_precision, 50.0);
}

TEST(AuditLexiconTest, Counts) {
  LexiconAudit audit = AuditLexicon({"a", "b", "c"}, {"a", "c", "d"});
  EXPECT_EQ(audit.correct, 2u);
  EXPECT_EQ(audit.incorrect, 1u);
}

TEST(RandomSegmentationTest, Extremes) {
  Rng rng(1);
  EXPECT_EQ(RandomSegmentation("abcd", 0, rng).ToString(), "abcd");
  EXPECT_EQ(RandomSegmentation("abcd", 3, rng).ToString(), "a b c d");
  EXPECT_EQ(RandomSegmentation("a", 0, rng).ToString(), "a");
  EXPECT_THROW(RandomSegmentation("abcd", 4, rng), InfeasibleBoundaryCount);
}

TEST(RandomSegmentationTest, ExactCount) {
  Rng rng(2);
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + gen() % 20;
    std::size_t k = gen() % n;
    Segmentation s = RandomSegmentation(std::string(n, 'a'), k, rng);
    EXPECT_EQ(s.boundaries().size(), k);
  }
}

TEST(RandomSegmentationTest, PositionsAreUniform) {
  Rng rng(4);
  const int draws = 30000;
  std::array<int, 3> hits{};
  for (int i = 0; i < draws; ++i) {
    ++hits[RandomSegmentation("abcd", 1, rng).boundaries()[0] - 1];
  }
  double chi2 = 0, expected = draws / 3.0;
  for (int h : hits) chi2 += (h - expected) * (h - expected) / expected;
  EXPECT_LT(chi2, 9.210);  // chi-square, 2 d.o.f., alpha = 0.01
}

}  // namespace
}  // namespace segdisc
