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

#include "deva/char_table.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "deva/error.hpp"
#include "deva/unicode.hpp"

namespace deva {

namespace {

constexpr std::string_view kEscapeLetters = "TDNGJRMH";
constexpr char32_t kLetterA = 0x0905;

using Cat = PhonemeCategory;

struct RawEntry {
  char32_t devanagari;
  const char* canonical;
  std::initializer_list<const char*> alts;
  Cat category;
  char32_t matra;  // 0 = none
};

// Vowels and diacritics, then consonants by varga. The lowercase spellings
// of the escape-coded entries are kept as lattice-only alternates.
const RawEntry kDefaultEntries[] = {
    {0x0905, "a", {}, Cat::IndependentVowel, 0},
    {0x0906, "aa", {}, Cat::IndependentVowel, 0x093E},
    {0x0907, "i", {}, Cat::IndependentVowel, 0x093F},
    {0x0908, "ii", {"ee"}, Cat::IndependentVowel, 0x0940},
    {0x0909, "u", {}, Cat::IndependentVowel, 0x0941},
    {0x090A, "uu", {"oo"}, Cat::IndependentVowel, 0x0942},
    {0x090F, "e", {}, Cat::IndependentVowel, 0x0947},
    {0x0910, "ai", {}, Cat::IndependentVowel, 0x0948},
    {0x0913, "o", {}, Cat::IndependentVowel, 0x094B},
    {0x0914, "au", {}, Cat::IndependentVowel, 0x094C},
    {0x090B, "R", {"ri"}, Cat::IndependentVowel, 0x0943},
    {0x0902, "M", {"m"}, Cat::Diacritic, 0},
    {0x0903, "H", {"h"}, Cat::Diacritic, 0},
    {0x0915, "k", {"q"}, Cat::Consonant, 0},
    {0x0916, "kh", {}, Cat::Consonant, 0},
    {0x0917, "g", {}, Cat::Consonant, 0},
    {0x0918, "gh", {}, Cat::Consonant, 0},
    {0x0919, "NG", {"nga"}, Cat::Consonant, 0},
    {0x091A, "c", {}, Cat::Consonant, 0},
    {0x091B, "ch", {}, Cat::Consonant, 0},
    {0x091C, "j", {"z"}, Cat::Consonant, 0},
    {0x091D, "jh", {}, Cat::Consonant, 0},
    {0x091E, "NJ", {"nja"}, Cat::Consonant, 0},
    {0x091F, "T", {"ta"}, Cat::Consonant, 0},
    {0x0920, "Th", {"tha"}, Cat::Consonant, 0},
    {0x0921, "D", {"da"}, Cat::Consonant, 0},
    {0x0922, "Dh", {"dha"}, Cat::Consonant, 0},
    {0x0923, "N", {"na"}, Cat::Consonant, 0},
    {0x0924, "t", {}, Cat::Consonant, 0},
    {0x0925, "th", {}, Cat::Consonant, 0},
    {0x0926, "d", {}, Cat::Consonant, 0},
    {0x0927, "dh", {}, Cat::Consonant, 0},
    {0x0928, "n", {}, Cat::Consonant, 0},
    {0x092A, "p", {}, Cat::Consonant, 0},
    {0x092B, "ph", {"f"}, Cat::Consonant, 0},
    {0x092C, "b", {}, Cat::Consonant, 0},
    {0x092D, "bh", {}, Cat::Consonant, 0},
    {0x092E, "m", {}, Cat::Consonant, 0},
    {0x092F, "y", {}, Cat::Consonant, 0},
    {0x0930, "r", {}, Cat::Consonant, 0},
    {0x0932, "l", {}, Cat::Consonant, 0},
    {0x0935, "v", {"w"}, Cat::Consonant, 0},
    {0x0936, "sh", {}, Cat::Consonant, 0},
    {0x0937, "ssh", {"sh"}, Cat::Consonant, 0},
    {0x0938, "s", {}, Cat::Consonant, 0},
    {0x0939, "h", {}, Cat::Consonant, 0},
};

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

void validate_code(const PhonemeEntry& e, const std::string& code) {
  if (code.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty phoneme code");
  }
  for (char c : code) {
    if (is_lower(c)) continue;
    if (is_upper(c) && kEscapeLetters.find(c) != std::string_view::npos) continue;
    throw Error(ErrorKind::InvalidArgument,
                "code '" + code + "' for " + encode_utf8(std::u32string(1, e.devanagari)) +
                    " uses a character outside [a-z] and the escape letters");
  }
}

std::string hex_scalar(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(c));
  return buf;
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

}  // namespace

std::string_view to_string(PhonemeCategory category) {
  switch (category) {
    case Cat::IndependentVowel: return "IndependentVowel";
    case Cat::Consonant: return "Consonant";
    case Cat::Diacritic: return "Diacritic";
  }
  return "Unknown";
}

std::optional<PhonemeCategory> parse_category(std::string_view name) {
  for (Cat c : {Cat::IndependentVowel, Cat::Consonant, Cat::Diacritic}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

bool PhonemeEntry::is_escape() const {
  return std::any_of(canonical_code.begin(), canonical_code.end(), is_upper);
}

CharacterTable::CharacterTable(std::vector<PhonemeEntry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const PhonemeEntry& e = entries_[i];
    const std::string name = encode_utf8(std::u32string(1, e.devanagari));
    if (!is_devanagari(e.devanagari)) {
      throw Error(ErrorKind::InvalidArgument, hex_scalar(e.devanagari) + " is not Devanagari");
    }
    validate_code(e, e.canonical_code);
    for (const std::string& alt : e.alt_codes) {
      validate_code(e, alt);
      if (alt == e.canonical_code) {
        throw Error(ErrorKind::InvalidArgument, name + ": canonical code repeated as alternate");
      }
    }
    const bool wants_matra = e.is_vowel() && e.devanagari != kLetterA;
    if (wants_matra != e.matra.has_value()) {
      throw Error(ErrorKind::InvalidArgument, name + ": matra must be present exactly for "
                                                     "independent vowels other than अ");
    }
    if (!char_index_.emplace(e.devanagari, i).second) {
      throw Error(ErrorKind::InvalidArgument, name + ": duplicate Devanagari entry");
    }
    if (e.matra && !matra_index_.emplace(*e.matra, i).second) {
      throw Error(ErrorKind::InvalidArgument, name + ": duplicate matra");
    }
    auto& canonical_refs = code_index_[e.canonical_code];
    if (std::any_of(canonical_refs.begin(), canonical_refs.end(),
                    [](const CodeRef& r) { return r.canonical; })) {
      throw Error(ErrorKind::InvalidArgument,
                  "canonical code '" + e.canonical_code + "' is not unique");
    }
    canonical_refs.push_back({i, true});
    for (const std::string& alt : e.alt_codes) code_index_[alt].push_back({i, false});
    if (is_upper(e.canonical_code.front())) escape_codes_.push_back(e.canonical_code);
  }
  for (auto& [code, refs] : code_index_) {
    max_code_length_ = std::max(max_code_length_, code.size());
    std::stable_sort(refs.begin(), refs.end(),
                     [](const CodeRef& a, const CodeRef& b) { return a.entry < b.entry; });
  }
  std::stable_sort(escape_codes_.begin(), escape_codes_.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
}

CharacterTable CharacterTable::load_default() {
  std::vector<PhonemeEntry> entries;
  for (const RawEntry& raw : kDefaultEntries) {
    PhonemeEntry e;
    e.devanagari = raw.devanagari;
    e.canonical_code = raw.canonical;
    for (const char* alt : raw.alts) e.alt_codes.emplace_back(alt);
    e.category = raw.category;
    if (raw.matra != 0) e.matra = raw.matra;
    entries.push_back(std::move(e));
  }
  return CharacterTable(std::move(entries));
}

const CharacterTable& CharacterTable::builtin() {
  static const CharacterTable table = load_default();
  return table;
}

CharacterTable CharacterTable::load_tsv(std::istream& in) {
  std::vector<PhonemeEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto where = "table line " + std::to_string(line_no);
    const auto fields = split(line, '\t');
    if (fields.size() != 5) {
      throw Error(ErrorKind::MalformedFile, where + ": expected 5 tab-separated fields");
    }
    const std::u32string deva = decode_utf8(fields[0]);
    if (deva.size() != 1) {
      throw Error(ErrorKind::MalformedFile, where + ": first field must be one scalar");
    }
    PhonemeEntry e;
    e.devanagari = deva.front();
    e.canonical_code = fields[1];
    if (!fields[2].empty()) e.alt_codes = split(fields[2], ',');
    const auto category = parse_category(fields[3]);
    if (!category) {
      throw Error(ErrorKind::MalformedFile, where + ": unknown category '" + fields[3] + "'");
    }
    e.category = *category;
    if (fields[4] != "-") {
      const std::u32string matra = decode_utf8(fields[4]);
      if (matra.size() != 1) {
        throw Error(ErrorKind::MalformedFile, where + ": matra must be one scalar or '-'");
      }
      e.matra = matra.front();
    }
    entries.push_back(std::move(e));
  }
  try {
    return CharacterTable(std::move(entries));
  } catch (const Error& err) {
    throw Error(ErrorKind::MalformedFile, err.what());
  }
}

void CharacterTable::save_tsv(std::ostream& out) const {
  for (const PhonemeEntry& e : entries_) {
    out << encode_utf8(std::u32string(1, e.devanagari)) << '\t' << e.canonical_code << '\t';
    for (std::size_t i = 0; i < e.alt_codes.size(); ++i) {
      if (i) out << ',';
      out << e.alt_codes[i];
    }
    out << '\t' << to_string(e.category) << '\t'
        << (e.matra ? encode_utf8(std::u32string(1, *e.matra)) : std::string("-")) << '\n';
  }
}

std::size_t CharacterTable::index_of(const PhonemeEntry& entry) const {
  return static_cast<std::size_t>(&entry - entries_.data());
}

std::vector<const PhonemeEntry*> CharacterTable::lookup_by_code(std::string_view code) const {
  std::vector<const PhonemeEntry*> out;
  const auto it = code_index_.find(std::string(code));
  if (it == code_index_.end()) return out;
  for (const CodeRef& ref : it->second) out.push_back(&entries_[ref.entry]);
  return out;
}

const PhonemeEntry* CharacterTable::lookup_by_char(char32_t ch) const {
  const auto it = char_index_.find(ch);
  return it == char_index_.end() ? nullptr : &entries_[it->second];
}

const PhonemeEntry* CharacterTable::lookup_by_matra(char32_t matra) const {
  const auto it = matra_index_.find(matra);
  return it == matra_index_.end() ? nullptr : &entries_[it->second];
}

std::vector<CodeMatch> CharacterTable::matches_at(std::string_view input, std::size_t pos) const {
  std::vector<CodeMatch> out;
  if (pos >= input.size()) return out;
  const std::size_t longest = std::min(max_code_length_, input.size() - pos);
  std::string probe;
  for (std::size_t len = longest; len > 0; --len) {
    probe.assign(input.substr(pos, len));
    const auto it = code_index_.find(probe);
    if (it == code_index_.end()) continue;
    // Canonical first, then alternates in table order.
    for (const CodeRef& ref : it->second) {
      if (ref.canonical) out.push_back({&entries_[ref.entry], len, true, true});
    }
    for (const CodeRef& ref : it->second) {
      if (ref.canonical) continue;
      const PhonemeEntry& e = entries_[ref.entry];
      out.push_back({&e, len, false, e.alt_codes_direct()});
    }
  }
  return out;
}

std::string CharacterTable::normalize_case(std::string_view roman) const {
  std::string out;
  out.reserve(roman.size());
  std::size_t i = 0;
  while (i < roman.size()) {
    const char c = roman[i];
    if (!is_upper(c)) {
      out.push_back(c);
      ++i;
      continue;
    }
    const auto escape = std::find_if(escape_codes_.begin(), escape_codes_.end(),
                                     [&](const std::string& code) {
                                       return roman.substr(i, code.size()) == code;
                                     });
    if (escape != escape_codes_.end()) {
      out += *escape;
      i += escape->size();
    } else {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
      ++i;
    }
  }
  return out;
}

std::string CharacterTable::reverse_transliterate(std::string_view word) const {
  const std::u32string scalars = decode_utf8(to_nfc(word));
  const PhonemeEntry* inherent = lookup_by_char(kLetterA);
  const std::string inherent_code = inherent ? inherent->canonical_code : "a";

  std::string out;
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    const char32_t c = scalars[i];
    if (const PhonemeEntry* e = lookup_by_char(c)) {
      out += e->canonical_code;
      if (!e->is_consonant()) continue;
      const char32_t next = i + 1 < scalars.size() ? scalars[i + 1] : 0;
      if (next == kVirama) {
        ++i;
      } else if (const PhonemeEntry* vowel = lookup_by_matra(next)) {
        out += vowel->canonical_code;
        ++i;
      } else {
        out += inherent_code;
      }
      continue;
    }
    // A sign that does not follow a consonant; romanize it as its vowel.
    if (const PhonemeEntry* vowel = lookup_by_matra(c)) {
      out += vowel->canonical_code;
      continue;
    }
    if (c == kVirama) continue;
    throw Error(ErrorKind::UnmappedCharacter,
                hex_scalar(c) + " in '" + std::string(word) + "' is not in the character table");
  }
  return out;
}

}  // namespace deva
