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

#ifndef DEVA_SEGMENTER_HPP_
#define DEVA_SEGMENTER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "deva/char_table.hpp"
#include "deva/composer.hpp"

namespace deva {

struct Arc {
  std::size_t start = 0;
  std::size_t end = 0;
  const PhonemeEntry* entry = nullptr;
  bool canonical = false;

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.start == b.start && a.end == b.end && a.entry == b.entry;
  }
};

/// A contiguous path of arcs covering the whole input.
struct Tokenization {
  std::vector<Arc> path;

  PhonemeSequence tokens() const;
  friend bool operator==(const Tokenization&, const Tokenization&) = default;
};

/// All arcs (i, j, e) with input[i..j) a code of e. Arcs leaving a position
/// are ordered longest first, canonical before alternate, then table order.
class TokenLattice {
 public:
  TokenLattice() = default;
  TokenLattice(std::string input, std::vector<std::vector<Arc>> arcs_by_start);

  const std::string& input() const { return input_; }
  const std::vector<Arc>& arcs_from(std::size_t pos) const { return arcs_by_start_[pos]; }
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const;

  // Number of complete paths, saturating at `cap`.
  std::size_t count_paths(std::size_t cap = static_cast<std::size_t>(-1)) const;

 private:
  std::string input_;
  std::vector<std::vector<Arc>> arcs_by_start_ = std::vector<std::vector<Arc>>(1);  // size input.size() + 1
};

// Input is case-normalized with the table's escape rule before matching.
TokenLattice build_lattice(const CharacterTable& table, std::string_view input);

// Maximal munch over directly typeable codes.
// Throws Error{NoSegmentation} at the first position nothing matches.
Tokenization greedy_tokenize(const CharacterTable& table, std::string_view input);

// Up to `limit` complete paths, fewest arcs first, then in arc order.
std::vector<Tokenization> enumerate_paths(const TokenLattice& lattice, std::size_t limit);

}  // namespace deva

#endif  // DEVA_SEGMENTER_HPP_
