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

#ifndef SWAPGEN_TEXT_H_
#define SWAPGEN_TEXT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers. All character offsets in this project count Unicode scalar
// values (code points), matching Python string indexing in the SQuAD tooling.
namespace swapgen::text {

bool IsValidUtf8(std::string_view s);

// Number of code points in a valid UTF-8 string.
std::size_t CodepointLength(std::string_view s);

// Maps code point positions to byte positions for one string. Position
// size() maps to the byte length, so half-open ranges can be converted.
class CodepointIndex {
 public:
  explicit CodepointIndex(std::string_view s);

  std::size_t size() const { return byte_offsets_.size() - 1; }
  std::size_t ByteOffset(std::size_t codepoint) const {
    return byte_offsets_[codepoint];
  }
  // Code point position of a byte offset, or nullopt when the byte offset is
  // not on a code point boundary.
  std::optional<std::size_t> CodepointAt(std::size_t byte_offset) const;

 private:
  std::vector<std::size_t> byte_offsets_;
};

// s[begin, end) in code points. Returns nullopt when the range is invalid.
std::optional<std::string> Substr(std::string_view s, std::size_t begin,
                                  std::size_t end);
std::optional<std::string> Substr(std::string_view s,
                                  const CodepointIndex& index,
                                  std::size_t begin, std::size_t end);

// Full Unicode lowercasing (root locale).
std::string ToLower(std::string_view s);

bool ContainsCaseless(std::string_view haystack, std::string_view needle);

bool IsNfc(std::string_view s);

bool StartsWithUpper(std::string_view s);

// Returns `replacement` with its first letter upper- or lower-cased to match
// the first letter of `model`.
std::string MatchInitialCase(std::string_view model,
                             std::string_view replacement);

}  // namespace swapgen::text

#endif  // SWAPGEN_TEXT_H_
