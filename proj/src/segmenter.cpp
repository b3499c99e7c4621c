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

#include "deva/segmenter.hpp"

#include <algorithm>
#include <limits>

#include "deva/error.hpp"

namespace deva {

PhonemeSequence Tokenization::tokens() const {
  PhonemeSequence out;
  out.reserve(path.size());
  for (const Arc& arc : path) out.push_back(arc.entry);
  return out;
}

TokenLattice::TokenLattice(std::string input, std::vector<std::vector<Arc>> arcs_by_start)
    : input_(std::move(input)), arcs_by_start_(std::move(arcs_by_start)) {
  arcs_by_start_.resize(input_.size() + 1);
}

std::vector<Arc> TokenLattice::arcs() const {
  std::vector<Arc> out;
  for (const auto& from : arcs_by_start_) out.insert(out.end(), from.begin(), from.end());
  return out;
}

std::size_t TokenLattice::arc_count() const {
  std::size_t n = 0;
  for (const auto& from : arcs_by_start_) n += from.size();
  return n;
}

std::size_t TokenLattice::count_paths(std::size_t cap) const {
  const std::size_t n = input_.size();
  std::vector<std::size_t> ways(n + 1, 0);
  ways[n] = 1;
  for (std::size_t pos = n; pos-- > 0;) {
    std::size_t total = 0;
    for (const Arc& arc : arcs_by_start_[pos]) {
      total = std::min(cap, total + std::min(cap, ways[arc.end]));
    }
    ways[pos] = total;
  }
  return std::min(cap, ways[0]);
}

TokenLattice build_lattice(const CharacterTable& table, std::string_view input) {
  std::string normalized = table.normalize_case(input);
  std::vector<std::vector<Arc>> arcs(normalized.size() + 1);
  for (std::size_t pos = 0; pos < normalized.size(); ++pos) {
    for (const CodeMatch& m : table.matches_at(normalized, pos)) {
      arcs[pos].push_back({pos, pos + m.length, m.entry, m.canonical});
    }
  }
  return TokenLattice(std::move(normalized), std::move(arcs));
}

Tokenization greedy_tokenize(const CharacterTable& table, std::string_view input) {
  const std::string normalized = table.normalize_case(input);
  Tokenization result;
  std::size_t pos = 0;
  while (pos < normalized.size()) {
    const auto matches = table.matches_at(normalized, pos);
    // matches_at orders longest first, canonical first within a length.
    const auto best = std::find_if(matches.begin(), matches.end(),
                                   [](const CodeMatch& m) { return m.direct; });
    if (best == matches.end()) {
      throw Error(ErrorKind::NoSegmentation, "no phoneme code matches '" +
                                                 normalized.substr(pos) + "' in '" +
                                                 std::string(input) + "'");
    }
    result.path.push_back({pos, pos + best->length, best->entry, best->canonical});
    pos += best->length;
  }
  return result;
}

std::vector<Tokenization> enumerate_paths(const TokenLattice& lattice, std::size_t limit) {
  std::vector<Tokenization> out;
  const std::size_t n = lattice.input().size();
  if (limit == 0) return out;

  // reachable[pos][k]: the end is reachable from pos using exactly k arcs.
  std::vector<std::vector<bool>> reachable(n + 1, std::vector<bool>(n + 1, false));
  reachable[n][0] = true;
  for (std::size_t pos = n; pos-- > 0;) {
    for (const Arc& arc : lattice.arcs_from(pos)) {
      for (std::size_t k = 0; k + 1 <= n; ++k) {
        if (reachable[arc.end][k]) reachable[pos][k + 1] = true;
      }
    }
  }

  std::vector<Arc> path;
  // Depth-first in arc order, pruned to branches that finish in `remaining`.
  auto walk = [&](auto& self, std::size_t pos, std::size_t remaining) -> void {
    if (out.size() >= limit) return;
    if (remaining == 0) {
      if (pos == n) out.push_back({path});
      return;
    }
    for (const Arc& arc : lattice.arcs_from(pos)) {
      if (!reachable[arc.end][remaining - 1]) continue;
      path.push_back(arc);
      self(self, arc.end, remaining - 1);
      path.pop_back();
      if (out.size() >= limit) return;
    }
  };

  for (std::size_t arcs = 0; arcs <= n && out.size() < limit; ++arcs) {
    if (reachable[0][arcs]) walk(walk, 0, arcs);
  }
  return out;
}

}  // namespace deva
