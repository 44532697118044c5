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

#include "segdisc/phoneme.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "segdisc/errors.h"

namespace segdisc {
namespace {

const PhonemeInventory& Inv() { return PhonemeInventory::Standard(); }

TEST(PhonemeInventoryTest, SizesAndClasses) {
  EXPECT_EQ(Inv().symbols().size(), 50u);
  EXPECT_EQ(PhonemeInventory::kEventCount, 51u);
  std::set<char> distinct(Inv().symbols().begin(), Inv().symbols().end());
  EXPECT_EQ(distinct.size(), 50u);

  int consonants = 0, vowels = 0, vowels_r = 0;
  for (char c : Inv().symbols()) {
    switch (Inv().ClassOf(c)) {
      case PhonemeClass::kConsonant: ++consonants; break;
      case PhonemeClass::kVowel: ++vowels; break;
      case PhonemeClass::kVowelR: ++vowels_r; break;
    }
  }
  EXPECT_EQ(consonants, 28);
  EXPECT_EQ(vowels, 15);
  EXPECT_EQ(vowels_r, 7);
}

TEST(PhonemeInventoryTest, HashIsAnOrdinaryPhonemeNotTheSentinel) {
  ASSERT_TRUE(Inv().Contains('#'));
  EXPECT_EQ(Inv().ClassOf('#'), PhonemeClass::kVowelR);
  for (int b = 0; b < 256; ++b) {
    EXPECT_NE(Inv().IndexOf(static_cast<char>(b)),
              static_cast<int>(PhonemeInventory::kSentinel));
  }
}

TEST(ParseUtteranceTest, TableOneLines) {
  auto words = ParseUtterance("hQ sIli 6v mi");
  ASSERT_EQ(words.size(), 4u);
  std::size_t phonemes = 0;
  for (const auto& w : words) phonemes += w.size();
  EXPECT_EQ(phonemes, 10u);
  EXPECT_EQ(words[1].phonemes(), "sIli");

  auto two = ParseUtterance("tu\n");
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].phonemes(), "tu");

  auto those = ParseUtterance("&nd WAt # Doz");
  ASSERT_EQ(those.size(), 4u);
  EXPECT_EQ(those[2].phonemes(), "#");
}

TEST(ParseUtteranceTest, UnknownPhonemeReportsCharAndPosition) {
  try {
    ParseUtterance("a$b");
    FAIL() << "expected UnknownPhoneme";
  } catch (const UnknownPhoneme& e) {
    EXPECT_EQ(e.symbol(), '$');
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(ParseUtteranceTest, EveryOtherByteIsRejected) {
  for (int b = 0; b < 256; ++b) {
    char c = static_cast<char>(b);
    if (c == ' ') continue;
    std::string line = std::string("a") + c + "b";
    if (Inv().Contains(c)) {
      EXPECT_NO_THROW(ParseUtterance(line)) << b;
    } else {
      EXPECT_THROW(ParseUtterance(line), UnknownPhoneme) << b;
    }
  }
}

TEST(ParseUtteranceTest, EmptyTokens) {
  EXPECT_THROW(ParseUtterance("a  b"), EmptyToken);
  EXPECT_THROW(ParseUtterance(" a"), EmptyToken);
  EXPECT_THROW(ParseUtterance("a "), EmptyToken);
  EXPECT_THROW(ParseUtterance(""), EmptyUtterance);
  EXPECT_THROW(ParseUtterance("\n"), EmptyUtterance);
}

TEST(ParseUtteranceTest, JoinRoundTripsRandomLines) {
  std::mt19937_64 rng(7);
  const auto symbols = Inv().symbols();
  for (int trial = 0; trial < 500; ++trial) {
    std::string line;
    int words = 1 + rng() % 6;
    for (int w = 0; w < words; ++w) {
      if (w) line.push_back(' ');
      int len = 1 + rng() % 7;
      for (int i = 0; i < len; ++i) line.push_back(symbols[rng() % symbols.size()]);
    }
    auto parsed = ParseUtterance(line);
    EXPECT_EQ(JoinWords(parsed), line);
    EXPECT_EQ(parsed.size(), static_cast<std::size_t>(words));
  }
}

TEST(WordTest, RejectsEmptyAndUnknown) {
  EXPECT_THROW(Word(""), EmptyToken);
  EXPECT_THROW(Word("ab!"), UnknownPhoneme);
  EXPECT_EQ(Word("lUk").phonemes(), "lUk");
}

TEST(VowelTest, VowelBearing) {
  EXPECT_TRUE(IsVowelBearing(Word("lUk")));
  EXPECT_FALSE(IsVowelBearing(Word("st")));
  EXPECT_TRUE(IsVowelBearing(Word("h*brAS")));  // '*' is an r-coloured vowel
  // Syllabic consonants do not count.
  EXPECT_FALSE(IsVowelBearing(Word("lL")));
  EXPECT_FALSE(IsVowelBearing(Word("M~")));
}

}  // namespace
}  // namespace segdisc
