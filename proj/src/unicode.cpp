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

#include "deva/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "deva/error.hpp"

namespace deva {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnmappedCharacter: return "UnmappedCharacter";
    case ErrorKind::IllegalSequence: return "IllegalSequence";
    case ErrorKind::NoSegmentation: return "NoSegmentation";
    case ErrorKind::InvalidEncoding: return "InvalidEncoding";
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::MissingData: return "MissingData";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *nfc;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      throw Error(ErrorKind::InvalidEncoding,
                  "ill-formed UTF-8 at byte offset " + std::to_string(at));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

void append_utf8(std::string& out, char32_t scalar) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(scalar), error);
  if (error) {
    throw Error(ErrorKind::InvalidEncoding, "not a Unicode scalar value");
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 3);
  for (char32_t c : text) append_utf8(out, c);
  return out;
}

bool is_valid_utf8(std::string_view text) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

std::string to_nfc(std::string_view text) {
  if (!is_valid_utf8(text)) {
    throw Error(ErrorKind::InvalidEncoding, "cannot normalize ill-formed UTF-8");
  }
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc_instance().normalize(
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(),
                                                    static_cast<int32_t>(text.size()))),
      status);
  if (U_FAILURE(status)) {
    throw Error(ErrorKind::InvalidEncoding, u_errorName(status));
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool is_nfc(std::string_view text) {
  if (!is_valid_utf8(text)) return false;
  UErrorCode status = U_ZERO_ERROR;
  const bool ok = nfc_instance().isNormalized(
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(),
                                                    static_cast<int32_t>(text.size()))),
      status);
  return U_SUCCESS(status) && ok;
}

}  // namespace deva
