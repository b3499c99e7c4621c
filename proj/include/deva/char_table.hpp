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

#ifndef DEVA_CHAR_TABLE_HPP_
#define DEVA_CHAR_TABLE_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace deva {

enum class PhonemeCategory { IndependentVowel, Consonant, Diacritic };

std::string_view to_string(PhonemeCategory category);
std::optional<PhonemeCategory> parse_category(std::string_view name);

struct PhonemeEntry {
  char32_t devanagari = 0;
  std::string canonical_code;
  std::vector<std::string> alt_codes;
  PhonemeCategory category = PhonemeCategory::Consonant;
  // Dependent vowel sign. Absent for अ, whose dependent form is the
  // inherent vowel.
  std::optional<char32_t> matra;

  bool is_vowel() const { return category == PhonemeCategory::IndependentVowel; }
  bool is_consonant() const { return category == PhonemeCategory::Consonant; }
  bool is_diacritic() const { return category == PhonemeCategory::Diacritic; }

  // True when the canonical code uses a reserved uppercase escape letter.
  // The alternate codes of such entries are only reachable from the
  // lattice, never from greedy direct mapping.
  bool is_escape() const;
  bool alt_codes_direct() const { return !is_escape(); }
};

/// One code occurrence of `entry` starting at some input position.
struct CodeMatch {
  const PhonemeEntry* entry = nullptr;
  std::size_t length = 0;
  bool canonical = false;
  bool direct = false;  // usable by greedy (maximal-munch) tokenization
};

/// Immutable roman <-> Devanagari phoneme table. Entries keep table order;
/// every lookup returning several entries returns them in that order.
class CharacterTable {
 public:
  // Validates every entry and index invariant; throws Error{InvalidArgument}.
  explicit CharacterTable(std::vector<PhonemeEntry> entries);

  static const CharacterTable& builtin();
  static CharacterTable load_default();
  // Override file: devanagari TAB canonical TAB alt,alt TAB category TAB matra|-
  static CharacterTable load_tsv(std::istream& in);
  void save_tsv(std::ostream& out) const;

  std::span<const PhonemeEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t index_of(const PhonemeEntry& entry) const;

  std::vector<const PhonemeEntry*> lookup_by_code(std::string_view code) const;
  const PhonemeEntry* lookup_by_char(char32_t ch) const;
  const PhonemeEntry* lookup_by_matra(char32_t matra) const;

  // Every code that occurs at `pos`, longest first; within a length the
  // canonical code precedes alternates, then table order.
  std::vector<CodeMatch> matches_at(std::string_view input, std::size_t pos) const;
  std::size_t max_code_length() const { return max_code_length_; }

  // Lowercases roman input except where a reserved escape code starts.
  std::string normalize_case(std::string_view roman) const;

  // Canonical romanization of an NFC Devanagari word.
  // Throws Error{UnmappedCharacter} for scalars outside the table.
  std::string reverse_transliterate(std::string_view word) const;

 private:
  struct CodeRef {
    std::size_t entry;
    bool canonical;
  };

  std::vector<PhonemeEntry> entries_;
  std::unordered_map<std::string, std::vector<CodeRef>> code_index_;
  std::unordered_map<char32_t, std::size_t> char_index_;
  std::unordered_map<char32_t, std::size_t> matra_index_;
  std::vector<std::string> escape_codes_;  // longest first
  std::size_t max_code_length_ = 0;
};

}  // namespace deva

#endif  // DEVA_CHAR_TABLE_HPP_
