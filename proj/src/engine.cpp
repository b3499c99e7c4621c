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

#include "deva/engine.hpp"

#include <algorithm>

#include "deva/composer.hpp"
#include "deva/error.hpp"
#include "deva/segmenter.hpp"

namespace deva {

namespace {

bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

void add_unique(std::vector<std::string>& keys, std::vector<std::string> more) {
  for (std::string& k : more) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(std::move(k));
  }
}

}  // namespace

std::string_view to_string(SuggestionSource source) {
  return source == SuggestionSource::Lexicon ? "Lexicon" : "Fallback";
}

std::string direct_map(const CharacterTable& table, std::string_view roman) {
  return compose(greedy_tokenize(table, roman).tokens());
}

Engine::Engine(const CharacterTable& table, const Lexicon& lexicon, EngineConfig config)
    : table_(table), lexicon_(lexicon), config_(config) {
  if (config_.max_suggestions == 0 || config_.path_limit == 0) {
    throw Error(ErrorKind::InvalidArgument, "max_suggestions and path_limit must be >= 1");
  }
}

std::vector<std::string> Engine::query_keys(std::string_view roman) const {
  std::vector<std::string> keys;
  try {
    add_unique(keys, key_variants(table_, normalize_key(table_, roman)));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NoSegmentation) throw;
    return keys;
  }

  const TokenLattice lattice = build_lattice(table_, roman);
  // Past the path limit the token is pathological; keep the greedy key only.
  if (lattice.count_paths(config_.path_limit + 1) > config_.path_limit) return keys;
  for (const Tokenization& path : enumerate_paths(lattice, config_.path_limit)) {
    std::string spelled;
    for (const Arc& arc : path.path) spelled += phonetic_class(*arc.entry);
    add_unique(keys, key_variants(table_, normalize_key(table_, spelled)));
  }
  return keys;
}

std::vector<Suggestion> Engine::suggest(std::string_view roman) const {
  if (roman.empty()) throw Error(ErrorKind::InvalidArgument, "empty token");
  const std::vector<std::string> keys = query_keys(roman);

  std::vector<const LexiconEntry*> hits;
  for (const std::string& key : keys) {
    const auto exact = lexicon_.lookup_exact(key);
    hits.insert(hits.end(), exact.begin(), exact.end());
  }
  if (hits.empty()) {
    for (const std::string& key : keys) {
      const auto partial = lexicon_.lookup_prefix(key, config_.max_suggestions);
      hits.insert(hits.end(), partial.begin(), partial.end());
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  std::sort(hits.begin(), hits.end(),
            [](const LexiconEntry* a, const LexiconEntry* b) { return ranks_before(*a, *b); });
  if (hits.size() > config_.max_suggestions) hits.resize(config_.max_suggestions);

  std::vector<Suggestion> out;
  out.reserve(hits.size());
  for (const LexiconEntry* e : hits) {
    out.push_back({e->word, e->frequency, SuggestionSource::Lexicon});
  }
  if (out.empty()) {
    out.push_back({direct_map(table_, roman), 0, SuggestionSource::Fallback});
  }
  return out;
}

std::string Engine::transliterate_sentence(std::string_view text) const {
  std::string out;
  out.reserve(text.size() * 3);
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_ascii_letter(text[i])) {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && is_ascii_letter(text[end])) ++end;
    const std::string_view token = text.substr(i, end - i);
    try {
      out += suggest(token).front().word;
    } catch (const Error&) {
      out += token;
    }
    i = end;
  }
  return out;
}

}  // namespace deva
