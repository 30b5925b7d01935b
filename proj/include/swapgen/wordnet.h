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

#ifndef SWAPGEN_WORDNET_H_
#define SWAPGEN_WORDNET_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace swapgen {

// Database files. Satellite adjectives (ss_type 's') live in the adjective
// file and are addressed through kAdj.
enum class WnFile { kNoun, kVerb, kAdj, kAdv };

struct WnPointer {
  std::string symbol;
  std::uint32_t target_offset = 0;
  // ss_type character as written in the file: n, v, a, s or r.
  char target_pos = 'n';
  // 1-based word numbers; 0 means the pointer relates whole synsets.
  std::uint16_t source_word = 0;
  std::uint16_t target_word = 0;
};

struct WnSynset {
  std::uint32_t offset = 0;
  char ss_type = 'n';
  // Words as written, with adjective markers such as "(a)" removed.
  std::vector<std::string> words;
  std::vector<WnPointer> pointers;
};

// Which antonym pointers a lookup follows.
//   kLemma: pointers whose source word is the queried lemma.
//   kSynset: pointers from every word of every synset the lemma belongs to.
enum class AntonymScope { kLemma, kSynset };

class WordNetDb {
 public:
  // Reads index.{noun,verb,adj,adv} and data.{noun,verb,adj,adv} from `dir`.
  // Throws kMissingFile or kMalformedFile (with file name and line number).
  static WordNetDb Load(const std::filesystem::path& dir);

  // Antonyms of `lemma` over all of its senses for a UD part of speech
  // (NOUN, VERB or ADJ; ADJ covers head and satellite adjectives).
  // Underscores are returned as spaces and the lemma itself is never
  // included. Throws kUnsupportedPos for any other tag.
  std::set<std::string> Antonyms(std::string_view lemma, std::string_view upos,
                                 AntonymScope scope = AntonymScope::kSynset) const;

  const WnSynset* FindSynset(WnFile file, std::uint32_t offset) const;
  // Synset offsets of a lowercase, underscore-joined lemma, in index order.
  const std::vector<std::uint32_t>* IndexLookup(WnFile file,
                                                std::string_view lemma) const;
  void ForEachSynset(
      const std::function<void(WnFile, const WnSynset&)>& fn) const;

  std::size_t NumSynsets() const;
  std::size_t NumIndexEntries() const;

 private:
  struct FileData {
    std::unordered_map<std::string, std::vector<std::uint32_t>> index;
    std::unordered_map<std::uint32_t, WnSynset> synsets;
  };
  std::array<FileData, 4> files_;
};

WnFile FileOfPos(char ss_type);

}  // namespace swapgen

#endif  // SWAPGEN_WORDNET_H_
