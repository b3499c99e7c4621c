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

#ifndef DEVA_UNICODE_HPP_
#define DEVA_UNICODE_HPP_

#include <string>
#include <string_view>

namespace deva {

// Strict UTF-8 decoding; throws Error{InvalidEncoding} on ill-formed input.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t scalar);

bool is_valid_utf8(std::string_view text);

// NFC normalization of UTF-8 text. Input must be valid UTF-8.
std::string to_nfc(std::string_view text);
bool is_nfc(std::string_view text);

inline bool is_devanagari(char32_t c) { return c >= 0x0900 && c <= 0x097F; }

inline constexpr char32_t kVirama = 0x094D;

}  // namespace deva

#endif  // DEVA_UNICODE_HPP_
