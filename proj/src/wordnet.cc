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

#include "swapgen/wordnet.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "swapgen/errors.h"
#include "swapgen/text.h"

namespace swapgen {
namespace {

constexpr std::array<std::string_view, 4> kSuffix = {"noun", "verb", "adj",
                                                     "adv"};
constexpr std::array<char, 4> kPosChar = {'n', 'v', 'a', 'r'};

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingFile, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "read failed: " + path.string());
  return std::move(buf).str();
}

// Splits a line on single spaces, skipping empty fields.
std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

class LineError {
 public:
  LineError(std::string file, std::size_t line)
      : file_(std::move(file)), line_(line) {}
  [[noreturn]] void operator()(const std::string& what) const {
    throw Error(ErrorCode::kMalformedFile,
                file_ + ":" + std::to_string(line_) + ": " + what);
  }

 private:
  std::string file_;
  std::size_t line_;
};

template <typename T>
T Number(std::string_view field, int base, const LineError& fail,
         const char* what) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value, base);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    fail(std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

bool IsPosChar(char c) {
  return c == 'n' || c == 'v' || c == 'a' || c == 's' || c == 'r';
}

std::string StripAdjMarker(std::string_view word) {
  if (word.size() > 2 && word.back() == ')') {
    const auto open = word.rfind('(');
    if (open != std::string_view::npos && open > 0) {
      const auto marker = word.substr(open);
      if (marker == "(a)" || marker == "(p)" || marker == "(ip)") {
        return std::string(word.substr(0, open));
      }
    }
  }
  return std::string(word);
}

// Iterates over the lines of `content`, skipping license lines, which start
// with a space.
template <typename Fn>
void ForEachLine(const std::string& content, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string::npos) end = content.size();
    ++lineno;
    std::string_view line(content.data() + pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != ' ') fn(line, pos, lineno);
    pos = end + 1;
  }
}

WnSynset ParseDataLine(std::string_view line, std::size_t byte_offset,
                       char file_pos, const LineError& fail) {
  const auto bar = line.find(" | ");
  const auto fields = Fields(line.substr(0, bar));
  if (fields.size() < 6) fail("truncated data line");
  WnSynset s;
  s.offset = Number<std::uint32_t>(fields[0], 10, fail, "synset offset");
  if (s.offset != byte_offset) fail("synset offset does not match file position");
  if (fields[2].size() != 1 || !IsPosChar(fields[2][0])) fail("bad ss_type");
  s.ss_type = fields[2][0];
  if ((s.ss_type == 's' ? 'a' : s.ss_type) != file_pos) {
    fail("ss_type does not belong in this file");
  }
  const auto w_cnt = Number<std::size_t>(fields[3], 16, fail, "word count");
  std::size_t i = 4;
  if (w_cnt == 0 || fields.size() < i + 2 * w_cnt + 1) fail("truncated word list");
  for (std::size_t w = 0; w < w_cnt; ++w, i += 2) {
    s.words.push_back(StripAdjMarker(fields[i]));
    Number<unsigned>(fields[i + 1], 16, fail, "lex_id");
  }
  const auto p_cnt = Number<std::size_t>(fields[i], 10, fail, "pointer count");
  ++i;
  if (fields.size() < i + 4 * p_cnt) fail("truncated pointer list");
  for (std::size_t p = 0; p < p_cnt; ++p, i += 4) {
    WnPointer ptr;
    ptr.symbol = std::string(fields[i]);
    ptr.target_offset = Number<std::uint32_t>(fields[i + 1], 10, fail, "target offset");
    if (fields[i + 2].size() != 1 || !IsPosChar(fields[i + 2][0])) {
      fail("bad pointer pos");
    }
    ptr.target_pos = fields[i + 2][0];
    const auto st = fields[i + 3];
    if (st.size() != 4) fail("bad source/target field");
    ptr.source_word = Number<std::uint16_t>(st.substr(0, 2), 16, fail, "source word");
    ptr.target_word = Number<std::uint16_t>(st.substr(2, 2), 16, fail, "target word");
    if (ptr.source_word > s.words.size()) fail("source word out of range");
    s.pointers.push_back(std::move(ptr));
  }
  return s;
}

std::string Key(std::string_view lemma) {
  std::string key = text::ToLower(lemma);
  std::replace(key.begin(), key.end(), ' ', '_');
  return key;
}

std::string Display(std::string_view word) {
  std::string out(word);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

}  // namespace

WnFile FileOfPos(char ss_type) {
  switch (ss_type) {
    case 'n':
      return WnFile::kNoun;
    case 'v':
      return WnFile::kVerb;
    case 'a':
    case 's':
      return WnFile::kAdj;
    default:
      return WnFile::kAdv;
  }
}

WordNetDb WordNetDb::Load(const std::filesystem::path& dir) {
  WordNetDb db;
  for (std::size_t f = 0; f < 4; ++f) {
    const std::string data_name = "data." + std::string(kSuffix[f]);
    const std::string content = ReadFile(dir / data_name);
    ForEachLine(content, [&](std::string_view line, std::size_t pos,
                             std::size_t lineno) {
      const LineError fail(data_name, lineno);
      WnSynset s = ParseDataLine(line, pos, kPosChar[f], fail);
      const auto offset = s.offset;
      db.files_[f].synsets.emplace(offset, std::move(s));
    });
  }
  for (std::size_t f = 0; f < 4; ++f) {
    const std::string index_name = "index." + std::string(kSuffix[f]);
    const std::string content = ReadFile(dir / index_name);
    ForEachLine(content, [&](std::string_view line, std::size_t,
                             std::size_t lineno) {
      const LineError fail(index_name, lineno);
      const auto fields = Fields(line);
      if (fields.size() < 6) fail("truncated index line");
      if (fields[1].size() != 1 || fields[1][0] != kPosChar[f]) fail("bad pos");
      const auto synset_cnt = Number<std::size_t>(fields[2], 10, fail, "synset count");
      const auto p_cnt = Number<std::size_t>(fields[3], 10, fail, "pointer count");
      const std::size_t first = 4 + p_cnt + 2;
      if (fields.size() != first + synset_cnt) fail("truncated index line");
      std::vector<std::uint32_t> offsets;
      for (std::size_t i = first; i < fields.size(); ++i) {
        const auto off = Number<std::uint32_t>(fields[i], 10, fail, "synset offset");
        if (!db.files_[f].synsets.contains(off)) fail("unknown synset offset");
        offsets.push_back(off);
      }
      if (!db.files_[f].index.emplace(std::string(fields[0]), std::move(offsets))
               .second) {
        fail("duplicate lemma");
      }
    });
  }
  for (std::size_t f = 0; f < 4; ++f) {
    const std::string data_name = "data." + std::string(kSuffix[f]);
    for (const auto& [offset, s] : db.files_[f].synsets) {
      for (const auto& p : s.pointers) {
        const WnSynset* target = db.FindSynset(FileOfPos(p.target_pos), p.target_offset);
        // Pointers name satellites by their file pos 'a'.
        if (!target || (target->ss_type != p.target_pos &&
                        !(p.target_pos == 'a' && target->ss_type == 's'))) {
          throw Error(ErrorCode::kMalformedFile,
                      data_name + ": synset " + std::to_string(offset) +
                          ": pointer target " + std::to_string(p.target_offset) +
                          p.target_pos + " does not resolve");
        }
        if (p.target_word > target->words.size()) {
          throw Error(ErrorCode::kMalformedFile,
                      data_name + ": synset " + std::to_string(offset) +
                          ": pointer target word out of range");
        }
      }
    }
  }
  return db;
}

std::set<std::string> WordNetDb::Antonyms(std::string_view lemma,
                                          std::string_view upos,
                                          AntonymScope scope) const {
  WnFile file;
  if (upos == "NOUN") {
    file = WnFile::kNoun;
  } else if (upos == "VERB") {
    file = WnFile::kVerb;
  } else if (upos == "ADJ") {
    file = WnFile::kAdj;
  } else {
    throw Error(ErrorCode::kUnsupportedPos,
                "no antonym lookup for part of speech '" + std::string(upos) + "'");
  }
  const std::string key = Key(lemma);
  std::set<std::string> out;
  const auto* offsets = IndexLookup(file, key);
  if (!offsets) return out;
  for (const auto offset : *offsets) {
    const WnSynset* s = FindSynset(file, offset);
    for (const auto& p : s->pointers) {
      if (p.symbol != "!") continue;
      if (scope == AntonymScope::kLemma &&
          (p.source_word == 0 || Key(s->words[p.source_word - 1]) != key)) {
        continue;
      }
      const WnSynset* target = FindSynset(FileOfPos(p.target_pos), p.target_offset);
      auto add = [&](const std::string& word) {
        if (Key(word) != key) out.insert(Display(word));
      };
      if (p.target_word == 0) {
        for (const auto& w : target->words) add(w);
      } else {
        add(target->words[p.target_word - 1]);
      }
    }
  }
  return out;
}

const WnSynset* WordNetDb::FindSynset(WnFile file, std::uint32_t offset) const {
  const auto& synsets = files_[static_cast<std::size_t>(file)].synsets;
  auto it = synsets.find(offset);
  return it == synsets.end() ? nullptr : &it->second;
}

const std::vector<std::uint32_t>* WordNetDb::IndexLookup(
    WnFile file, std::string_view lemma) const {
  const auto& index = files_[static_cast<std::size_t>(file)].index;
  auto it = index.find(std::string(lemma));
  return it == index.end() ? nullptr : &it->second;
}

void WordNetDb::ForEachSynset(
    const std::function<void(WnFile, const WnSynset&)>& fn) const {
  for (std::size_t f = 0; f < 4; ++f) {
    for (const auto& [offset, s] : files_[f].synsets) fn(static_cast<WnFile>(f), s);
  }
}

std::size_t WordNetDb::NumSynsets() const {
  std::size_t n = 0;
  for (const auto& f : files_) n += f.synsets.size();
  return n;
}

std::size_t WordNetDb::NumIndexEntries() const {
  std::size_t n = 0;
  for (const auto& f : files_) n += f.index.size();
  return n;
}

}  // namespace swapgen
