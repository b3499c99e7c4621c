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

#ifndef DEVA_COMPOSER_HPP_
#define DEVA_COMPOSER_HPP_

#include <span>
#include <string>
#include <vector>

#include "deva/char_table.hpp"

namespace deva {

// Entries point into a CharacterTable that must outlive the sequence.
using PhonemeSequence = std::vector<const PhonemeEntry*>;

// Whether `first` takes a virama when immediately followed by `second`.
// Clusters that do not conjoin keep the first consonant's inherent vowel.
bool conjoins(const PhonemeEntry& first, const PhonemeEntry& second);

// Renders phonemes as NFC Devanagari. The whole sequence is one word.
// Throws Error{IllegalSequence} when a diacritic comes first.
std::string compose(std::span<const PhonemeEntry* const> tokens);

}  // namespace deva

#endif  // DEVA_COMPOSER_HPP_
