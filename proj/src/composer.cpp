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

#include <algorithm>
#include <array>

#include "deva/error.hpp"
#include "deva/unicode.hpp"

namespace deva {

namespace {

constexpr char32_t kRa = 0x0930;
constexpr char32_t kHa = 0x0939;
constexpr char32_t kSa = 0x0938;
constexpr char32_t kSha = 0x0936;

bool in(char32_t c, std::initializer_list<char32_t> set) {
  return std::find(set.begin(), set.end(), c) != set.end();
}

bool is_sibilant(char32_t c) { return in(c, {0x0936, 0x0937, 0x0938}); }
bool is_nasal(char32_t c) { return in(c, {0x0919, 0x091E, 0x0923, 0x0928, 0x092E}); }
bool is_semivowel(char32_t c) { return in(c, {0x092F, 0x0930, 0x0932, 0x0935}); }

// Unvoiced/voiced stops and their aspirates, क..ब excluding the nasals.
bool is_stop(char32_t c) { return c >= 0x0915 && c <= 0x092D && !is_nasal(c); }

// The five stop rows are laid out unaspirated/aspirated in pairs.
bool is_aspirate_of(char32_t plain, char32_t aspirate) {
  return is_stop(plain) && is_stop(aspirate) && aspirate == plain + 1 &&
         in(plain, {0x0915, 0x0917, 0x091A, 0x091C, 0x091F, 0x0921, 0x0924, 0x0926,
                    0x092A, 0x092C});
}

}  // namespace

bool conjoins(const PhonemeEntry& first, const PhonemeEntry& second) {
  if (!first.is_consonant() || !second.is_consonant()) return false;
  const char32_t a = first.devanagari;
  const char32_t b = second.devanagari;
  if (a == b || is_aspirate_of(a, b)) return true;
  // "kh", "sh", "Th", ... : a following ह would merge into an aspirate
  // code, and स+श would read back as ष.
  if (b == kHa) return false;
  if (a == kSa && b == kSha) return false;
  if (a == kRa || is_semivowel(b)) return true;
  if (is_sibilant(a)) return true;
  if (is_nasal(a) && is_stop(b)) return true;
  return false;
}

std::string compose(std::span<const PhonemeEntry* const> tokens) {
  std::string out;
  const PhonemeEntry* prev = nullptr;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const PhonemeEntry& token = *tokens[i];
    switch (token.category) {
      case PhonemeCategory::Diacritic:
        if (i == 0) {
          throw Error(ErrorKind::IllegalSequence, "diacritic cannot start a word");
        }
        append_utf8(out, token.devanagari);
        break;
      case PhonemeCategory::IndependentVowel:
        if (prev != nullptr && prev->is_consonant()) {
          if (token.matra) append_utf8(out, *token.matra);
        } else {
          append_utf8(out, token.devanagari);
        }
        break;
      case PhonemeCategory::Consonant: {
        append_utf8(out, token.devanagari);
        const PhonemeEntry* next = i + 1 < tokens.size() ? tokens[i + 1] : nullptr;
        if (next != nullptr && conjoins(token, *next)) append_utf8(out, kVirama);
        break;
      }
    }
    prev = &token;
  }
  return out;
}

}  // namespace deva
