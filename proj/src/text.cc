// Copyright 2026 The swapgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapgen/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>

namespace swapgen::text {
namespace {

// Decodes the code point at byte `i`, advancing `i`. Returns a negative value
// on malformed input.
UChar32 NextCodepoint(std::string_view s, std::size_t& i) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  int32_t pos = static_cast<int32_t>(i);
  UChar32 c;
  U8_NEXT(bytes, pos, static_cast<int32_t>(s.size()), c);
  i = static_cast<std::size_t>(pos);
  return c;
}

std::string AppendCodepoint(std::string out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH, c, error);
  if (error) return out;
  out.append(buf, static_cast<std::size_t>(len));
  return out;
}

}  // namespace

bool IsValidUtf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (NextCodepoint(s, i) < 0) return false;
  }
  return true;
}

std::size_t CodepointLength(std::string_view s) {
  std::size_t n = 0;
  for (char ch : s) {
    // Count every byte that is not a continuation byte.
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
  }
  return n;
}

CodepointIndex::CodepointIndex(std::string_view s) {
  byte_offsets_.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      byte_offsets_.push_back(i);
    }
  }
  byte_offsets_.push_back(s.size());
}

std::optional<std::size_t> CodepointIndex::CodepointAt(
    std::size_t byte_offset) const {
  auto it = std::lower_bound(byte_offsets_.begin(), byte_offsets_.end(),
                             byte_offset);
  if (it == byte_offsets_.end() || *it != byte_offset) return std::nullopt;
  return static_cast<std::size_t>(it - byte_offsets_.begin());
}

std::optional<std::string> Substr(std::string_view s, std::size_t begin,
                                  std::size_t end) {
  return Substr(s, CodepointIndex(s), begin, end);
}

std::optional<std::string> Substr(std::string_view s,
                                  const CodepointIndex& index,
                                  std::size_t begin, std::size_t end) {
  if (begin > end || end > index.size()) return std::nullopt;
  const std::size_t b = index.ByteOffset(begin);
  const std::size_t e = index.ByteOffset(end);
  return std::string(s.substr(b, e - b));
}

std::string ToLower(std::string_view s) {
  bool ascii = std::all_of(s.begin(), s.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
  if (ascii) {
    std::string out(s);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  u.toLower(icu::Locale::getRoot());
  std::string out;
  u.toUTF8String(out);
  return out;
}

bool ContainsCaseless(std::string_view haystack, std::string_view needle) {
  return ToLower(haystack).find(ToLower(needle)) != std::string::npos;
}

bool IsNfc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return false;
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  const bool normalized = nfc->isNormalized(u, status);
  return U_SUCCESS(status) && normalized;
}

bool StartsWithUpper(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  const UChar32 c = NextCodepoint(s, i);
  return c >= 0 && u_isupper(c);
}

std::string MatchInitialCase(std::string_view model,
                             std::string_view replacement) {
  if (model.empty() || replacement.empty()) return std::string(replacement);
  std::size_t mi = 0;
  const UChar32 m = NextCodepoint(model, mi);
  std::size_t ri = 0;
  const UChar32 r = NextCodepoint(replacement, ri);
  if (m < 0 || r < 0) return std::string(replacement);
  UChar32 mapped = r;
  if (u_isupper(m)) {
    mapped = u_toupper(r);
  } else if (u_islower(m)) {
    mapped = u_tolower(r);
  }
  std::string out = AppendCodepoint(std::string(), mapped);
  out.append(replacement.substr(ri));
  return out;
}

}  // namespace swapgen::text
