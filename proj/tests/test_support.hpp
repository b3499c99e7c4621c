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

// Generators and brute-force oracles shared by the test binaries. Nothing
// here calls into the lattice, the edit-distance DP, or the lexicon trie.

#ifndef DEVA_TESTS_TEST_SUPPORT_HPP_
#define DEVA_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "deva/char_table.hpp"
#include "deva/composer.hpp"

namespace deva::testing {

inline const PhonemeEntry& entry(const CharacterTable& table, char32_t c) {
  return *table.lookup_by_char(c);
}

inline PhonemeSequence seq(const CharacterTable& table, std::u32string_view chars) {
  PhonemeSequence out;
  for (char32_t c : chars) out.push_back(table.lookup_by_char(c));
  return out;
}

// Number of ways to split `s` into codes of table entries, counting one arc
// per (start, end, entry). Plain recursion over every code of every entry.
inline std::size_t brute_force_segmentations(const CharacterTable& table, std::string_view s,
                                             std::size_t pos = 0) {
  if (pos == s.size()) return 1;
  std::size_t total = 0;
  for (const PhonemeEntry& e : table.entries()) {
    std::vector<std::string> codes{e.canonical_code};
    codes.insert(codes.end(), e.alt_codes.begin(), e.alt_codes.end());
    for (const std::string& code : codes) {
      if (s.substr(pos, code.size()) == code) {
        total += brute_force_segmentations(table, s, pos + code.size());
      }
    }
  }
  return total;
}

// Exhaustive Levenshtein recursion; exponential, for short strings only.
inline std::size_t recursive_edit_distance(std::string_view a, std::string_view b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  const std::size_t drop_a = recursive_edit_distance(a.substr(1), b) + 1;
  const std::size_t drop_b = recursive_edit_distance(a, b.substr(1)) + 1;
  const std::size_t both =
      recursive_edit_distance(a.substr(1), b.substr(1)) + (a.front() == b.front() ? 0 : 1);
  return std::min({drop_a, drop_b, both});
}

// Roman string over lowercase letters plus whole escape codes, so that case
// normalization leaves it unchanged.
inline std::string random_roman(std::mt19937& rng, std::size_t max_len,
                                bool with_escapes = true) {
  static const std::string kLetters = "abcdefghijklmnopqrstuvwxyz";
  static const std::vector<std::string> kEscapes = {"T", "Th", "D", "Dh", "N",
                                                    "NG", "NJ", "R", "M", "H"};
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  const std::size_t target = len_dist(rng);
  std::string out;
  while (out.size() < target) {
    if (with_escapes && std::uniform_int_distribution<int>(0, 9)(rng) == 0) {
      const std::string& esc = kEscapes[rng() % kEscapes.size()];
      if (out.size() + esc.size() <= target) out += esc;
      continue;
    }
    out.push_back(kLetters[rng() % kLetters.size()]);
  }
  return out;
}

// A phoneme sequence shaped like a word: no diacritics, no escape-coded
// phonemes, and never a vowel right after a vowel.
inline PhonemeSequence random_word(std::mt19937& rng, const CharacterTable& table,
                                   std::size_t max_phonemes = 10) {
  std::vector<const PhonemeEntry*> vowels;
  std::vector<const PhonemeEntry*> consonants;
  for (const PhonemeEntry& e : table.entries()) {
    if (e.is_escape() || e.is_diacritic()) continue;
    (e.is_vowel() ? vowels : consonants).push_back(&e);
  }
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_phonemes)(rng);
  PhonemeSequence out;
  std::bernoulli_distribution start_with_vowel(0.2);
  std::bernoulli_distribution take_vowel(0.6);
  for (std::size_t i = 0; i < n; ++i) {
    const bool after_vowel = !out.empty() && out.back()->is_vowel();
    const bool vowel = out.empty() ? start_with_vowel(rng) : (!after_vowel && take_vowel(rng));
    const auto& pool = vowel ? vowels : consonants;
    out.push_back(pool[rng() % pool.size()]);
  }
  return out;
}

// Makes every inherent vowel explicit: a consonant that is not followed by
// a vowel or by a consonant it conjoins with gets an अ token.
inline PhonemeSequence explicit_inherent_vowels(const CharacterTable& table,
                                                const PhonemeSequence& tokens) {
  const PhonemeEntry* a = table.lookup_by_char(0x0905);
  PhonemeSequence out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.push_back(tokens[i]);
    if (!tokens[i]->is_consonant()) continue;
    const PhonemeEntry* next = i + 1 < tokens.size() ? tokens[i + 1] : nullptr;
    if (next != nullptr && (next->is_vowel() || conjoins(*tokens[i], *next))) continue;
    out.push_back(a);
  }
  return out;
}

}  // namespace deva::testing

#endif  // DEVA_TESTS_TEST_SUPPORT_HPP_
