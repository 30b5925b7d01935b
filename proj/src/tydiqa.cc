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

// TydiQA primary task -> SQuAD 2.0 (minimal-span variant).

#include <zlib.h>

#include <map>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "swapgen/corpus_io.h"
#include "swapgen/errors.h"
#include "swapgen/text.h"

namespace swapgen {
namespace {

using json = nlohmann::json;

constexpr std::string_view kSupportedLanguage = "english";

struct ByteSpan {
  std::int64_t start;
  std::int64_t end;
  bool operator<(const ByteSpan& o) const {
    return start != o.start ? start < o.start : end < o.end;
  }
};

[[noreturn]] void Malformed(std::string_view source, std::size_t line,
                            const std::string& what) {
  throw Error(ErrorCode::kMalformedFile, std::string(source) + ":" +
                                             std::to_string(line) + ": " + what);
}

std::int64_t IntField(const json& obj, const char* key, std::string_view source,
                      std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    Malformed(source, line, std::string("missing integer field '") + key + "'");
  }
  return it->get<std::int64_t>();
}

std::string StringField(const json& obj, const char* key,
                        std::string_view source, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    Malformed(source, line, std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

std::string ExampleId(const json& ex, std::string_view source, std::size_t line) {
  auto it = ex.find("example_id");
  if (it != ex.end() && it->is_number_integer()) {
    return std::to_string(it->get<std::int64_t>());
  }
  if (it != ex.end() && it->is_string()) return it->get<std::string>();
  Malformed(source, line, "missing example_id");
}

}  // namespace

QaDataset ConvertTydiQaMinSpan(std::istream& jsonl, std::string_view language,
                               std::string_view source_name) {
  if (text::ToLower(language) != kSupportedLanguage) {
    throw Error(ErrorCode::kUnsupportedLanguage,
                "only the english subset is supported, got '" +
                    std::string(language) + "'");
  }
  QaDataset d;
  d.version = "tydiqa-minspan-english";
  std::map<std::string, std::size_t> article_of_title;
  std::map<std::pair<std::size_t, std::string>, std::size_t> paragraph_of;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(jsonl, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json ex;
    try {
      ex = json::parse(line);
    } catch (const json::parse_error& e) {
      Malformed(source_name, lineno, e.what());
    }
    if (!ex.is_object()) Malformed(source_name, lineno, "record is not an object");
    if (StringField(ex, "language", source_name, lineno) != kSupportedLanguage) {
      continue;
    }
    const std::string plaintext =
        StringField(ex, "document_plaintext", source_name, lineno);
    auto anns = ex.find("annotations");
    if (anns == ex.end() || !anns->is_array()) {
      Malformed(source_name, lineno, "missing annotations");
    }

    bool yes_no = false;
    bool passage_only = false;
    std::vector<ByteSpan> minimal;
    for (const json& ann : *anns) {
      if (!ann.is_object()) Malformed(source_name, lineno, "bad annotation");
      if (StringField(ann, "yes_no_answer", source_name, lineno) != "NONE") {
        yes_no = true;
      }
      auto min_it = ann.find("minimal_answer");
      if (min_it == ann.end() || !min_it->is_object()) {
        Malformed(source_name, lineno, "missing minimal_answer");
      }
      const ByteSpan span{
          IntField(*min_it, "plaintext_start_byte", source_name, lineno),
          IntField(*min_it, "plaintext_end_byte", source_name, lineno)};
      auto pass_it = ann.find("passage_answer");
      if (pass_it == ann.end() || !pass_it->is_object()) {
        Malformed(source_name, lineno, "missing passage_answer");
      }
      const bool has_passage =
          IntField(*pass_it, "candidate_index", source_name, lineno) >= 0;
      if (span.start >= 0) {
        bool dup = false;
        for (const auto& m : minimal) dup = dup || (!(m < span) && !(span < m));
        if (!dup) minimal.push_back(span);
      } else if (has_passage) {
        passage_only = true;
      }
    }
    if (yes_no) continue;
    if (minimal.empty() && passage_only) continue;

    QuestionEntry entry;
    entry.id = ExampleId(ex, source_name, lineno);
    entry.question = StringField(ex, "question_text", source_name, lineno);
    entry.is_impossible = minimal.empty();
    const text::CodepointIndex index(plaintext);
    for (const auto& span : minimal) {
      if (span.end < span.start ||
          static_cast<std::size_t>(span.end) > plaintext.size()) {
        Malformed(source_name, lineno, "minimal answer bytes out of range");
      }
      const auto begin_cp = index.CodepointAt(static_cast<std::size_t>(span.start));
      const auto end_cp = index.CodepointAt(static_cast<std::size_t>(span.end));
      if (!begin_cp || !end_cp) {
        Malformed(source_name, lineno,
                  "minimal answer not on a character boundary");
      }
      entry.answers.push_back(
          {plaintext.substr(static_cast<std::size_t>(span.start),
                            static_cast<std::size_t>(span.end - span.start)),
           static_cast<std::int64_t>(*begin_cp)});
    }

    std::string title = StringField(ex, "document_title", source_name, lineno);
    if (title.empty()) title = "untitled";
    auto [art_it, new_article] =
        article_of_title.emplace(title, d.articles.size());
    if (new_article) d.articles.push_back({title, {}});
    Article& article = d.articles[art_it->second];
    std::string context_id = ContextId(plaintext);
    auto [par_it, new_paragraph] = paragraph_of.emplace(
        std::make_pair(art_it->second, context_id), article.paragraphs.size());
    if (new_paragraph) {
      article.paragraphs.push_back({plaintext, std::move(context_id), {}});
    }
    article.paragraphs[par_it->second].qas.push_back(std::move(entry));
  }
  if (jsonl.bad()) {
    throw Error(ErrorCode::kIoFailure, "read failed: " + std::string(source_name));
  }
  ValidateDataset(d);
  return d;
}

QaDataset ConvertTydiQaMinSpan(const std::filesystem::path& path,
                               std::string_view language) {
  // gzread passes uncompressed files through unchanged.
  std::unique_ptr<gzFile_s, decltype(&gzclose)> gz(
      gzopen(path.string().c_str(), "rb"), &gzclose);
  if (!gz) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::string content;
  char buf[1 << 16];
  int n;
  while ((n = gzread(gz.get(), buf, sizeof(buf))) > 0) {
    content.append(buf, static_cast<std::size_t>(n));
  }
  if (n < 0) {
    throw Error(ErrorCode::kMalformedFile, "corrupt gzip stream: " + path.string());
  }
  std::istringstream in(std::move(content));
  return ConvertTydiQaMinSpan(in, language, path.string());
}

}  // namespace swapgen
