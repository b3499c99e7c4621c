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

#include "deva/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>

#include "deva/error.hpp"
#include "deva/segmenter.hpp"
#include "deva/unicode.hpp"

namespace deva {

namespace {

constexpr char32_t kFirstWordScalar = 0x0900;
constexpr char32_t kLastWordScalar = 0x0963;  // danda U+0964 and digits end a word
constexpr int kMaxFoldPasses = 16;

bool is_word_scalar(char32_t c) { return c >= kFirstWordScalar && c <= kLastWordScalar; }

std::size_t scalar_count(std::string_view utf8) {
  return static_cast<std::size_t>(std::count_if(
      utf8.begin(), utf8.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

bool is_key(std::string_view key) {
  return !key.empty() &&
         std::all_of(key.begin(), key.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.emplace_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

void merge_keys(std::vector<std::string>& into, const std::vector<std::string>& more) {
  for (const std::string& k : more) {
    if (std::find(into.begin(), into.end(), k) == into.end()) into.push_back(k);
  }
}

}  // namespace

FrequencyMap ingest_corpus(std::string_view text) {
  const std::u32string scalars = decode_utf8(text);
  FrequencyMap counts;
  std::u32string word;
  auto flush = [&] {
    if (word.empty()) return;
    ++counts[to_nfc(encode_utf8(word))];
    word.clear();
  };
  for (char32_t c : scalars) {
    if (is_word_scalar(c)) {
      word.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return counts;
}

FrequencyMap ingest_corpus(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return ingest_corpus(text);
}

std::string phonetic_class(const PhonemeEntry& entry) {
  switch (entry.devanagari) {
    case 0x0905: case 0x0906: return "a";
    case 0x0907: case 0x0908: return "i";
    case 0x0909: case 0x090A: return "u";
    case 0x090F: case 0x0910: return "e";
    case 0x0913: case 0x0914: return "o";
    case 0x090B: return "ri";
    case 0x0902: return "n";
    case 0x0903: return "h";
    case 0x0919: case 0x091E: case 0x0923: return "n";
    case 0x091F: return "t";
    case 0x0920: return "th";
    case 0x0921: return "d";
    case 0x0922: return "dh";
    case 0x0937: return "sh";
    default: break;
  }
  std::string out = entry.canonical_code;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string normalize_key(const CharacterTable& table, std::string_view roman) {
  if (roman.empty()) throw Error(ErrorKind::InvalidArgument, "empty roman spelling");
  std::string current(roman);
  // Class strings can re-tokenize differently ("a"+"i" reads as ai), so
  // fold until nothing changes.
  for (int pass = 0; pass < kMaxFoldPasses; ++pass) {
    std::string folded;
    for (const Arc& arc : greedy_tokenize(table, current).path) {
      folded += phonetic_class(*arc.entry);
    }
    if (folded == current) break;
    current = std::move(folded);
  }
  return current;
}

std::string schwa_dropped_key(const CharacterTable& table, std::string_view key) {
  if (key.empty()) return {};
  const Tokenization segments = greedy_tokenize(table, key);
  const std::size_t last = segments.path.size() - 1;
  std::string out;
  for (std::size_t i = 0; i < segments.path.size(); ++i) {
    const Arc& seg = segments.path[i];
    const std::string_view text = key.substr(seg.start, seg.end - seg.start);
    if (text == "a" && i != 0 && i != last) continue;
    out += text;
  }
  return out;
}

std::vector<std::string> key_variants(const CharacterTable& table, std::string_view key) {
  std::vector<std::string> out{std::string(key)};
  std::string dropped = schwa_dropped_key(table, key);
  if (dropped != out.front()) out.push_back(std::move(dropped));
  return out;
}

bool ranks_before(const LexiconEntry& a, const LexiconEntry& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  const std::size_t la = scalar_count(a.word);
  const std::size_t lb = scalar_count(b.word);
  if (la != lb) return la < lb;
  // UTF-8 byte order coincides with code-point order.
  return a.word < b.word;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) : entries_(std::move(entries)) {
  for (std::uint32_t id = 0; id < entries_.size(); ++id) {
    const LexiconEntry& e = entries_[id];
    if (e.word.empty() || e.frequency == 0 || e.keys.empty()) {
      throw Error(ErrorKind::InvalidArgument,
                  "lexicon entry '" + e.word + "' needs a word, frequency >= 1 and a key");
    }
    total_tokens_ += e.frequency;
    for (const std::string& key : e.keys) {
      if (!is_key(key)) {
        throw Error(ErrorKind::InvalidArgument,
                    "key '" + key + "' of '" + e.word + "' is not lowercase roman");
      }
      index_key(key, id);
    }
  }
}

void Lexicon::index_key(const std::string& key, std::uint32_t entry) {
  std::uint32_t node = 0;
  for (char c : key) {
    const auto it = trie_[node].children.find(c);
    if (it != trie_[node].children.end()) {
      node = it->second;
      continue;
    }
    const auto child = static_cast<std::uint32_t>(trie_.size());
    trie_[node].children.emplace(c, child);
    trie_.emplace_back();
    node = child;
  }
  auto& ids = trie_[node].entries;
  if (std::find(ids.begin(), ids.end(), entry) == ids.end()) ids.push_back(entry);
}

const Lexicon::TrieNode* Lexicon::find_node(std::string_view key) const {
  std::uint32_t node = 0;
  for (char c : key) {
    const auto it = trie_[node].children.find(c);
    if (it == trie_[node].children.end()) return nullptr;
    node = it->second;
  }
  return &trie_[node];
}

std::vector<const LexiconEntry*> Lexicon::ranked(std::vector<std::uint32_t> ids,
                                                 std::size_t limit) const {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<const LexiconEntry*> out;
  out.reserve(ids.size());
  for (std::uint32_t id : ids) out.push_back(&entries_[id]);
  std::sort(out.begin(), out.end(),
            [](const LexiconEntry* a, const LexiconEntry* b) { return ranks_before(*a, *b); });
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::vector<const LexiconEntry*> Lexicon::lookup_exact(std::string_view key) const {
  const TrieNode* node = find_node(key);
  if (node == nullptr) return {};
  return ranked(node->entries, kUnlimited);
}

std::vector<const LexiconEntry*> Lexicon::lookup_prefix(std::string_view prefix,
                                                        std::size_t limit) const {
  const TrieNode* start = find_node(prefix);
  if (start == nullptr || limit == 0) return {};
  std::vector<std::uint32_t> ids;
  std::vector<const TrieNode*> stack{start};
  while (!stack.empty()) {
    const TrieNode* node = stack.back();
    stack.pop_back();
    ids.insert(ids.end(), node->entries.begin(), node->entries.end());
    for (const auto& [c, child] : node->children) stack.push_back(&trie_[child]);
  }
  return ranked(std::move(ids), limit);
}

Lexicon Lexicon::build(const FrequencyMap& freqs, const CharacterTable& table,
                       LexiconBuildStats* stats) {
  std::map<std::string, LexiconEntry> merged;
  for (const auto& [raw_word, frequency] : freqs) {
    if (frequency == 0) continue;
    std::string word;
    std::vector<std::string> keys;
    try {
      word = to_nfc(raw_word);
      keys = key_variants(table, normalize_key(table, table.reverse_transliterate(word)));
    } catch (const Error&) {
      if (stats != nullptr) {
        ++stats->skipped_words;
        stats->skipped.push_back(raw_word);
      }
      continue;
    }
    auto [it, inserted] = merged.try_emplace(word, LexiconEntry{word, 0, {}});
    it->second.frequency += frequency;
    merge_keys(it->second.keys, keys);
  }
  std::vector<LexiconEntry> entries;
  entries.reserve(merged.size());
  for (auto& [word, entry] : merged) entries.push_back(std::move(entry));
  return Lexicon(std::move(entries));
}

void Lexicon::save(std::ostream& out) const {
  out << kHeader << '\n';
  for (const LexiconEntry& e : entries_) {
    out << e.word << '\t' << e.frequency << '\t';
    for (std::size_t i = 0; i < e.keys.size(); ++i) {
      if (i) out << ',';
      out << e.keys[i];
    }
    out << '\n';
  }
}

Lexicon Lexicon::load(std::istream& in, const CharacterTable& table) {
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::map<std::string, LexiconEntry> merged;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "lexicon line " + std::to_string(line_no);
    if (!saw_header) {
      if (line != kHeader) {
        throw Error(ErrorKind::MalformedFile, where + ": missing header '" +
                                                  std::string(kHeader) + "'");
      }
      saw_header = true;
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorKind::MalformedFile, where + ": expected 3 tab-separated fields, got " +
                                                std::to_string(fields.size()));
    }
    const std::string& word = fields[0];
    if (word.empty() || !is_valid_utf8(word) || !is_nfc(word)) {
      throw Error(ErrorKind::MalformedFile, where + ": word is not NFC UTF-8");
    }
    std::uint64_t frequency = 0;
    const std::string& f = fields[1];
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), frequency);
    if (ec != std::errc() || ptr != f.data() + f.size() || f.empty() || frequency == 0) {
      throw Error(ErrorKind::MalformedFile, where + ": frequency '" + f +
                                                "' is not a positive integer");
    }
    std::vector<std::string> keys;
    if (fields[2].empty()) {
      try {
        keys = key_variants(table, normalize_key(table, table.reverse_transliterate(word)));
      } catch (const Error& err) {
        throw Error(ErrorKind::MalformedFile, where + ": cannot derive keys: " + err.what());
      }
    } else {
      keys = split(fields[2], ',');
      for (const std::string& key : keys) {
        if (!is_key(key)) {
          throw Error(ErrorKind::MalformedFile, where + ": bad key '" + key + "'");
        }
      }
    }
    auto [it, inserted] = merged.try_emplace(word, LexiconEntry{word, 0, {}});
    it->second.frequency += frequency;
    merge_keys(it->second.keys, keys);
  }
  if (!saw_header) {
    throw Error(ErrorKind::MalformedFile, "lexicon file is empty (no header)");
  }
  std::vector<LexiconEntry> entries;
  entries.reserve(merged.size());
  for (auto& [word, entry] : merged) entries.push_back(std::move(entry));
  return Lexicon(std::move(entries));
}

}  // namespace deva
