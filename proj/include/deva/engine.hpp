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

#ifndef DEVA_ENGINE_HPP_
#define DEVA_ENGINE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "deva/char_table.hpp"
#include "deva/lexicon.hpp"

namespace deva {

enum class SuggestionSource { Lexicon, Fallback };

std::string_view to_string(SuggestionSource source);

struct Suggestion {
  std::string word;
  std::uint64_t frequency = 0;  // always 0 for Fallback
  SuggestionSource source = SuggestionSource::Lexicon;

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

struct EngineConfig {
  std::size_t max_suggestions = 5;
  std::size_t path_limit = 64;
};

// compose(greedy_tokenize(roman)). Throws NoSegmentation / IllegalSequence.
std::string direct_map(const CharacterTable& table, std::string_view roman);

/// Roman token -> ranked Devanagari candidates. Holds references only;
/// the table and lexicon must outlive the engine.
class Engine {
 public:
  // Throws Error{InvalidArgument} if max_suggestions or path_limit is 0.
  Engine(const CharacterTable& table, const Lexicon& lexicon, EngineConfig config = {});

  const EngineConfig& config() const { return config_; }

  // Phonetic keys a token is looked up under: its folded spelling, lattice
  // path spellings, and the schwa-dropped variant of each. Empty when the
  // token cannot be segmented.
  std::vector<std::string> query_keys(std::string_view roman) const;

  // Exact key hits outrank prefix hits, which are consulted only when there
  // is no exact hit. With no hit at all, returns the direct mapping.
  std::vector<Suggestion> suggest(std::string_view roman) const;

  // Replaces every run of ASCII letters by its top suggestion; all other
  // characters are kept verbatim. Untypeable runs pass through unchanged.
  std::string transliterate_sentence(std::string_view text) const;

 private:
  const CharacterTable& table_;
  const Lexicon& lexicon_;
  EngineConfig config_;
};

}  // namespace deva

#endif  // DEVA_ENGINE_HPP_
