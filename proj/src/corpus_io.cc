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

#include "swapgen/corpus_io.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "swapgen/errors.h"
#include "swapgen/hashing.h"
#include "swapgen/text.h"

namespace swapgen {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kAntonymTag = "antonym";
constexpr std::string_view kEntityTag = "entity";

[[noreturn]] void Violation(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, where + ": " + what);
}

const json& Member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Violation(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string StringMember(const json& obj, const char* key,
                         const std::string& where) {
  const json& v = Member(obj, key, where);
  if (!v.is_string()) Violation(where, std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

std::vector<AnswerSpan> ParseAnswers(const json& arr, const std::string& where) {
  if (!arr.is_array()) Violation(where, "answers is not a list");
  std::vector<AnswerSpan> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& a = arr[i];
    if (!a.is_object()) Violation(at, "answer is not an object");
    AnswerSpan span;
    span.text = StringMember(a, "text", at);
    const json& start = Member(a, "answer_start", at);
    if (!start.is_number_integer()) Violation(at, "answer_start is not an integer");
    span.answer_start = start.get<std::int64_t>();
    out.push_back(std::move(span));
  }
  return out;
}

std::string QuestionPath(std::size_t a, std::size_t p, std::size_t q) {
  return "data[" + std::to_string(a) + "].paragraphs[" + std::to_string(p) +
         "].qas[" + std::to_string(q) + "]";
}

void CheckSpan(const AnswerSpan& span, const Paragraph& para,
               const text::CodepointIndex& index, const std::string& where,
               bool check_text) {
  const std::size_t len = text::CodepointLength(span.text);
  if (span.answer_start < 0 ||
      static_cast<std::size_t>(span.answer_start) + len > index.size()) {
    Violation(where, "answer_start " + std::to_string(span.answer_start) +
                         " out of range for context of length " +
                         std::to_string(index.size()));
  }
  if (!check_text) return;
  const auto begin = static_cast<std::size_t>(span.answer_start);
  auto sub = text::Substr(para.context, index, begin, begin + len);
  if (!sub || *sub != span.text) {
    Violation(where, "answer text '" + span.text +
                         "' does not match the context at offset " +
                         std::to_string(span.answer_start));
  }
}

ordered_json AnswersJson(const std::vector<AnswerSpan>& spans) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : spans) {
    ordered_json a;
    a["text"] = s.text;
    a["answer_start"] = s.answer_start;
    arr.push_back(std::move(a));
  }
  return arr;
}

}  // namespace

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kOriginal:
      return "original";
    case Provenance::kAntonymAug:
      return "antonym";
    case Provenance::kEntityAug:
      return "entity";
  }
  return "original";
}

std::size_t QaDataset::NumParagraphs() const {
  std::size_t n = 0;
  for (const auto& a : articles) n += a.paragraphs.size();
  return n;
}

std::size_t QaDataset::NumQuestions() const {
  std::size_t n = 0;
  for (const auto& a : articles) {
    for (const auto& p : a.paragraphs) n += p.qas.size();
  }
  return n;
}

std::string ContextId(std::string_view context) { return Sha256Hex(context); }

std::string GeneratedId(std::string_view seed_id, std::string_view strategy,
                        std::size_t k) {
  std::string id(seed_id);
  id.push_back('-');
  id.append(strategy);
  id.push_back('-');
  id.append(std::to_string(k));
  return id;
}

Provenance ProvenanceFromId(std::string_view id) {
  const auto dash = id.rfind('-');
  if (dash == std::string_view::npos || dash + 1 == id.size()) {
    return Provenance::kOriginal;
  }
  const std::string_view counter = id.substr(dash + 1);
  if (!std::all_of(counter.begin(), counter.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return Provenance::kOriginal;
  }
  const std::string_view head = id.substr(0, dash);
  auto ends_with_tag = [&](std::string_view tag) {
    return head.size() > tag.size() + 1 && head.ends_with(tag) &&
           head[head.size() - tag.size() - 1] == '-';
  };
  if (ends_with_tag(kAntonymTag)) return Provenance::kAntonymAug;
  if (ends_with_tag(kEntityTag)) return Provenance::kEntityAug;
  return Provenance::kOriginal;
}

void ValidateDataset(const QaDataset& d) {
  for (std::size_t a = 0; a < d.articles.size(); ++a) {
    const Article& article = d.articles[a];
    if (article.title.empty()) {
      Violation("data[" + std::to_string(a) + "]", "empty article title");
    }
    for (std::size_t p = 0; p < article.paragraphs.size(); ++p) {
      const Paragraph& para = article.paragraphs[p];
      const text::CodepointIndex index(para.context);
      if (para.context_id != ContextId(para.context)) {
        Violation("data[" + std::to_string(a) + "].paragraphs[" +
                      std::to_string(p) + "]",
                  "context_id does not match the context digest");
      }
      for (std::size_t q = 0; q < para.qas.size(); ++q) {
        const QuestionEntry& e = para.qas[q];
        const std::string where = QuestionPath(a, p, q) + " (id " + e.id + ")";
        if (e.is_impossible && !e.answers.empty()) {
          Violation(where, "unanswerable question has answers");
        }
        if (!e.is_impossible && e.answers.empty()) {
          Violation(where, "answerable question has no answers");
        }
        if (e.provenance != Provenance::kOriginal && !e.is_impossible) {
          Violation(where, "generated question is not marked is_impossible");
        }
        for (const auto& span : e.answers) {
          CheckSpan(span, para, index, where, /*check_text=*/true);
        }
        if (e.plausible_answers) {
          for (const auto& span : *e.plausible_answers) {
            CheckSpan(span, para, index, where + " plausible_answers",
                      /*check_text=*/false);
          }
        }
      }
    }
  }
}

QaDataset ParseSquad(std::string_view json_text, std::string_view source_name) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedFile,
                std::string(source_name) + ": " + e.what());
  }
  const std::string top = std::string(source_name);
  if (!root.is_object()) Violation(top, "top level is not an object");
  QaDataset d;
  d.version = StringMember(root, "version", top);
  const json& data = Member(root, "data", top);
  if (!data.is_array()) Violation(top, "'data' is not a list");
  d.articles.reserve(data.size());
  for (std::size_t a = 0; a < data.size(); ++a) {
    const std::string at = "data[" + std::to_string(a) + "]";
    const json& ja = data[a];
    if (!ja.is_object()) Violation(at, "article is not an object");
    Article article;
    article.title = StringMember(ja, "title", at);
    const json& paras = Member(ja, "paragraphs", at);
    if (!paras.is_array()) Violation(at, "'paragraphs' is not a list");
    article.paragraphs.reserve(paras.size());
    for (std::size_t p = 0; p < paras.size(); ++p) {
      const std::string pt = at + ".paragraphs[" + std::to_string(p) + "]";
      const json& jp = paras[p];
      if (!jp.is_object()) Violation(pt, "paragraph is not an object");
      Paragraph para;
      para.context = StringMember(jp, "context", pt);
      para.context_id = ContextId(para.context);
      const json& qas = Member(jp, "qas", pt);
      if (!qas.is_array()) Violation(pt, "'qas' is not a list");
      para.qas.reserve(qas.size());
      for (std::size_t q = 0; q < qas.size(); ++q) {
        const std::string qt = QuestionPath(a, p, q);
        const json& jq = qas[q];
        if (!jq.is_object()) Violation(qt, "question is not an object");
        QuestionEntry e;
        e.id = StringMember(jq, "id", qt);
        e.question = StringMember(jq, "question", qt);
        const json& imp = Member(jq, "is_impossible", qt);
        if (!imp.is_boolean()) Violation(qt, "is_impossible is not a boolean");
        e.is_impossible = imp.get<bool>();
        e.answers = ParseAnswers(Member(jq, "answers", qt), qt + ".answers");
        if (auto it = jq.find("plausible_answers"); it != jq.end()) {
          e.plausible_answers = ParseAnswers(*it, qt + ".plausible_answers");
        }
        e.provenance =
            e.is_impossible ? ProvenanceFromId(e.id) : Provenance::kOriginal;
        para.qas.push_back(std::move(e));
      }
      article.paragraphs.push_back(std::move(para));
    }
    d.articles.push_back(std::move(article));
  }
  ValidateDataset(d);
  return d;
}

QaDataset LoadSquad(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseSquad(buf.str(), path.string());
}

std::string SerializeSquad(const QaDataset& d) {
  ordered_json root;
  root["version"] = d.version;
  ordered_json data = ordered_json::array();
  for (const auto& article : d.articles) {
    ordered_json ja;
    ja["title"] = article.title;
    ordered_json paras = ordered_json::array();
    for (const auto& para : article.paragraphs) {
      ordered_json jp;
      jp["context"] = para.context;
      ordered_json qas = ordered_json::array();
      for (const auto& e : para.qas) {
        ordered_json jq;
        jq["id"] = e.id;
        jq["question"] = e.question;
        jq["is_impossible"] = e.is_impossible;
        jq["answers"] = AnswersJson(e.answers);
        if (e.plausible_answers) {
          jq["plausible_answers"] = AnswersJson(*e.plausible_answers);
        }
        qas.push_back(std::move(jq));
      }
      jp["qas"] = std::move(qas);
      paras.push_back(std::move(jp));
    }
    ja["paragraphs"] = std::move(paras);
    data.push_back(std::move(ja));
  }
  root["data"] = std::move(data);
  return root.dump();
}

void WriteSquad(const QaDataset& d, const std::filesystem::path& path) {
  const std::string bytes = SerializeSquad(d);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path.string());
}

QaDataset MergeAugmented(const QaDataset& base,
                         std::span<const GeneratedQuestion> generated) {
  QaDataset out = base;
  std::unordered_map<std::string, Paragraph*> by_context;
  std::unordered_set<std::string> ids;
  for (auto& article : out.articles) {
    for (auto& para : article.paragraphs) {
      by_context.emplace(para.context_id, &para);
      for (const auto& e : para.qas) ids.insert(e.id);
    }
  }
  for (const auto& g : generated) {
    if (!g.entry.is_impossible || !g.entry.answers.empty() ||
        g.entry.provenance == Provenance::kOriginal) {
      throw Error(ErrorCode::kSchemaViolation,
                  "generated entry " + g.entry.id +
                      " must be unanswerable with generated provenance");
    }
    auto it = by_context.find(g.context_id);
    if (it == by_context.end()) {
      throw Error(ErrorCode::kUnknownContext,
                  "generated entry " + g.entry.id + " refers to context " +
                      g.context_id);
    }
    if (!ids.insert(g.entry.id).second) {
      throw Error(ErrorCode::kDuplicateId, "question id " + g.entry.id);
    }
    it->second->qas.push_back(g.entry);
  }
  return out;
}

std::vector<GeneratedQuestion> ExtractGenerated(const QaDataset& d) {
  std::vector<GeneratedQuestion> out;
  for (const auto& article : d.articles) {
    for (const auto& para : article.paragraphs) {
      for (const auto& e : para.qas) {
        if (e.provenance != Provenance::kOriginal) {
          out.push_back({para.context_id, e});
        }
      }
    }
  }
  return out;
}

QaDataset StripGenerated(const QaDataset& d) {
  QaDataset out = d;
  for (auto& article : out.articles) {
    for (auto& para : article.paragraphs) {
      std::erase_if(para.qas, [](const QuestionEntry& e) {
        return e.provenance != Provenance::kOriginal;
      });
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::vector<GeneratedQuestion>>> Subsample(
    std::span<const GeneratedQuestion> pool, std::span<const std::size_t> sizes,
    std::uint64_t seed) {
  std::set<std::size_t> seen;
  for (std::size_t s : sizes) {
    if (s > pool.size()) {
      throw Error(ErrorCode::kSampleTooLarge,
                  "sample of " + std::to_string(s) + " from a pool of " +
                      std::to_string(pool.size()));
    }
    if (!seen.insert(s).second) {
      throw Error(ErrorCode::kConfigError,
                  "duplicate sample size " + std::to_string(s));
    }
  }
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  SeededRng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.Below(i));
    std::swap(order[i - 1], order[j]);
  }
  std::vector<std::pair<std::size_t, std::vector<GeneratedQuestion>>> out;
  out.reserve(sizes.size());
  for (std::size_t s : sizes) {
    std::vector<std::size_t> picked(order.begin(), order.begin() + s);
    std::sort(picked.begin(), picked.end());
    std::vector<GeneratedQuestion> sample;
    sample.reserve(s);
    for (std::size_t i : picked) sample.push_back(pool[i]);
    out.emplace_back(s, std::move(sample));
  }
  return out;
}

}  // namespace swapgen
