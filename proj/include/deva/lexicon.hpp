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

#ifndef DEVA_LEXICON_HPP_
#define DEVA_LEXICON_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deva/char_table.hpp"

namespace deva {

using FrequencyMap = std::map<std::string, std::uint64_t>;

// Counts maximal runs of U+0900..U+0963 (danda and digits split tokens).
// Words are NFC. Throws Error{InvalidEncoding} on ill-formed UTF-8.
FrequencyMap ingest_corpus(std::string_view text);
FrequencyMap ingest_corpus(std::istream& in);

// Class string of one phoneme: long/short vowel pairs fold together,
// retroflex consonants fold to dentals, w/f/z/q variants fold through
// their phoneme.
std::string phonetic_class(const PhonemeEntry& entry);

// Folds a roman spelling to its phonetic key. Idempotent.
// Throws Error{NoSegmentation} when the spelling is not typeable.
std::string normalize_key(const CharacterTable& table, std::string_view roman);

// Drops every "a" segment of a key except the first and last segment.
std::string schwa_dropped_key(const CharacterTable& table, std::string_view key);

// Both keys a word or query is indexed under, deduplicated.
std::vector<std::string> key_variants(const CharacterTable& table, std::string_view key);

struct LexiconEntry {
  std::string word;
  std::uint64_t frequency = 0;
  std::vector<std::string> keys;
};

// Frequency descending, then shorter word (in scalars), then code-point order.
bool ranks_before(const LexiconEntry& a, const LexiconEntry& b);

struct LexiconBuildStats {
  std::size_t skipped_words = 0;
  std::vector<std::string> skipped;
};

/// Frequency lexicon with a key trie. Immutable once built.
class Lexicon {
 public:
  static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

  Lexicon() = default;
  explicit Lexicon(std::vector<LexiconEntry> entries);

  // Words outside the table are skipped and reported in `stats`.
  static Lexicon build(const FrequencyMap& freqs, const CharacterTable& table,
                       LexiconBuildStats* stats = nullptr);

  static constexpr std::string_view kHeader = "#deva-lexicon v1";
  void save(std::ostream& out) const;
  // Throws Error{MalformedFile}.
  static Lexicon load(std::istream& in, const CharacterTable& table);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t total_tokens() const { return total_tokens_; }

  // Results are ranked with ranks_before.
  std::vector<const LexiconEntry*> lookup_exact(std::string_view key) const;
  std::vector<const LexiconEntry*> lookup_prefix(std::string_view prefix,
                                                 std::size_t limit) const;

 private:
  struct TrieNode {
    std::map<char, std::uint32_t> children;
    std::vector<std::uint32_t> entries;
  };

  void index_key(const std::string& key, std::uint32_t entry);
  const TrieNode* find_node(std::string_view key) const;
  std::vector<const LexiconEntry*> ranked(std::vector<std::uint32_t> ids,
                                          std::size_t limit) const;

  std::vector<LexiconEntry> entries_;
  std::vector<TrieNode> trie_ = std::vector<TrieNode>(1);
  std::uint64_t total_tokens_ = 0;
};

}  // namespace deva

#endif  // DEVA_LEXICON_HPP_
