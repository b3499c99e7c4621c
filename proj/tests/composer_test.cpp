// Copyright 2026 The Deva IME Authors.
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

#include "deva/composer.hpp"

#include <gtest/gtest.h>

#include <random>

#include "deva/error.hpp"
#include "deva/segmenter.hpp"
#include "deva/unicode.hpp"
#include "test_support.hpp"

namespace deva {
namespace {

using testing::seq;

const CharacterTable& table() { return CharacterTable::builtin(); }

std::string compose_chars(std::u32string_view chars) { return compose(seq(table(), chars)); }

TEST(ComposerTest, MatraRow) {
  EXPECT_EQ("क", compose_chars(U"क"));
  EXPECT_EQ("क", compose_chars(U"कअ"));
  EXPECT_EQ("का", compose_chars(U"कआ"));
  EXPECT_EQ("कि", compose_chars(U"कइ"));
  EXPECT_EQ("की", compose_chars(U"कई"));
  EXPECT_EQ("कु", compose_chars(U"कउ"));
  EXPECT_EQ("कू", compose_chars(U"कऊ"));
  EXPECT_EQ("के", compose_chars(U"कए"));
  EXPECT_EQ("कै", compose_chars(U"कऐ"));
  EXPECT_EQ("को", compose_chars(U"कओ"));
  EXPECT_EQ("कौ", compose_chars(U"कऔ"));
  EXPECT_EQ("कृ", compose_chars(U"कऋ"));
  EXPECT_EQ("है", compose_chars(U"हऐ"));
}

TEST(ComposerTest, GridRowsForOtherConsonants) {
  for (char32_t c : {U'च', U'ट', U'र', U'ल'}) {
    const std::u32string cons(1, c);
    EXPECT_EQ(encode_utf8(cons + U"ा"), compose_chars(cons + U"आ"));
    EXPECT_EQ(encode_utf8(cons + U"ृ"), compose_chars(cons + U"ऋ"));
  }
}

TEST(ComposerTest, RaClusters) {
  EXPECT_EQ("क्र", compose_chars(U"कर"));
  EXPECT_EQ("च्र", compose_chars(U"चर"));
  EXPECT_EQ("ट्र", compose_chars(U"टर"));
  EXPECT_EQ("ल्र", compose_chars(U"लर"));
  EXPECT_EQ("र्क", compose_chars(U"रक"));
}

TEST(ComposerTest, ConjunctSelection) {
  EXPECT_EQ("स्थ", compose_chars(U"सथ"));
  EXPECT_EQ("क्क", compose_chars(U"कक"));
  EXPECT_EQ("द्ध", compose_chars(U"दध"));
  EXPECT_EQ("न्द", compose_chars(U"नद"));
  EXPECT_EQ("स्त्र", compose_chars(U"सतर"));
  // Not a cluster: the first consonant keeps its inherent vowel.
  EXPECT_EQ("जध", compose_chars(U"जध"));
  EXPECT_EQ("कह", compose_chars(U"कह"));
  EXPECT_EQ("सह", compose_chars(U"सह"));
}

TEST(ComposerTest, VowelPlacement) {
  EXPECT_EQ("", compose({}));
  EXPECT_EQ("अ", compose_chars(U"अ"));
  EXPECT_EQ("आई", compose_chars(U"आई"));
  EXPECT_EQ("कई", compose_chars(U"कअई"));
  EXPECT_EQ("कं", compose_chars(U"कं"));
  EXPECT_EQ("कंइ", compose_chars(U"कंइ"));
  EXPECT_EQ("अः", compose_chars(U"अः"));
}

TEST(ComposerTest, DiacriticFirstIsIllegal) {
  try {
    compose_chars(U"ंक");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(ErrorKind::IllegalSequence, e.kind());
  }
}

TEST(ComposerTest, BareConsonantIsIndependentForm) {
  for (const PhonemeEntry& e : table().entries()) {
    if (!e.is_consonant()) continue;
    const PhonemeEntry* one[] = {&e};
    EXPECT_EQ(encode_utf8(std::u32string(1, e.devanagari)), compose(one));
  }
}

// Every conjoining pair must romanize unambiguously, or the
// reverse/direct round trip would break.
TEST(ComposerTest, ConjoiningPairsRetokenize) {
  for (const PhonemeEntry& a : table().entries()) {
    for (const PhonemeEntry& b : table().entries()) {
      if (!conjoins(a, b)) continue;
      const Tokenization t = greedy_tokenize(table(), a.canonical_code + b.canonical_code);
      ASSERT_EQ(2u, t.path.size()) << a.canonical_code << "+" << b.canonical_code;
      EXPECT_EQ(&a, t.path[0].entry);
      EXPECT_EQ(&b, t.path[1].entry);
    }
  }
}

TEST(ComposerTest, OutputProperties) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::string w = compose(testing::random_word(rng, table()));
    ASSERT_TRUE(is_nfc(w));
    const std::u32string s = decode_utf8(w);
    ASSERT_FALSE(s.empty());
    EXPECT_EQ(nullptr, table().lookup_by_matra(s.front())) << w;
    for (std::size_t k = 0; k < s.size(); ++k) {
      const bool known = table().lookup_by_char(s[k]) || table().lookup_by_matra(s[k]) ||
                         s[k] == kVirama;
      EXPECT_TRUE(known);
      if (k > 0) {
        EXPECT_FALSE(table().lookup_by_matra(s[k - 1]) && table().lookup_by_matra(s[k])) << w;
      }
    }
  }
}

TEST(ComposerTest, TokenRoundTripThroughRomanization) {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const PhonemeSequence word = testing::random_word(rng, table());
    const PhonemeSequence expected = testing::explicit_inherent_vowels(table(), word);
    const std::string roman = table().reverse_transliterate(compose(word));
    const PhonemeSequence back = greedy_tokenize(table(), roman).tokens();
    std::string want, got;
    for (const auto* e : expected) want += e->canonical_code + ".";
    for (const auto* e : back) got += e->canonical_code + ".";
    EXPECT_EQ(want, got);
  }
}

}  // namespace
}  // namespace deva
