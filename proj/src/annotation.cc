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

#include "swapgen/annotation.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "swapgen/errors.h"
#include "swapgen/text.h"

namespace swapgen {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void RecordError(std::string_view source, std::size_t line,
                              const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, std::string(source) + ":" +
                                               std::to_string(line) + ": " +
                                               what);
}

std::string Str(const json& obj, const char* key, std::string_view source,
                std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    RecordError(source, line, std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

std::size_t Index(const json& obj, const char* key, std::string_view source,
                  std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer() || it->get<std::int64_t>() < 0) {
    RecordError(source, line,
                std::string("missing non-negative integer field '") + key + "'");
  }
  return it->get<std::size_t>();
}

const json& Array(const json& obj, const char* key, std::string_view source,
                  std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    RecordError(source, line, std::string("missing list field '") + key + "'");
  }
  return *it;
}

AnnotatedQuestion ParseQuestionRecord(const json& rec, std::string_view source,
                                      std::size_t line) {
  AnnotatedQuestion q;
  q.question_id = Str(rec, "question_id", source, line);
  for (const json& t : Array(rec, "tokens", source, line)) {
    if (!t.is_object()) RecordError(source, line, "token is not an object");
    Token tok;
    tok.text = Str(t, "text", source, line);
    tok.lemma = Str(t, "lemma", source, line);
    tok.upos = Str(t, "upos", source, line);
    tok.start = Index(t, "start", source, line);
    tok.end = Index(t, "end", source, line);
    tok.head = Index(t, "head", source, line);
    tok.deprel = Str(t, "deprel", source, line);
    q.tokens.push_back(std::move(tok));
  }
  for (const json& e : Array(rec, "entities", source, line)) {
    if (!e.is_object()) RecordError(source, line, "entity is not an object");
    QuestionEntity ent;
    ent.start_token = Index(e, "start_token", source, line);
    ent.end_token = Index(e, "end_token", source, line);
    ent.label = Str(e, "label", source, line);
    ent.surface = Str(e, "surface", source, line);
    q.entities.push_back(std::move(ent));
  }
  return q;
}

AnnotatedContext ParseContextRecord(const json& rec, std::string_view source,
                                    std::size_t line) {
  AnnotatedContext c;
  c.context_id = Str(rec, "context_id", source, line);
  for (const json& e : Array(rec, "entities", source, line)) {
    if (!e.is_object()) RecordError(source, line, "entity is not an object");
    ContextEntity ent;
    ent.start = Index(e, "start", source, line);
    ent.end = Index(e, "end", source, line);
    ent.label = Str(e, "label", source, line);
    ent.surface = Str(e, "surface", source, line);
    c.entities.push_back(std::move(ent));
  }
  return c;
}

void CheckAgainstText(const AnnotatedQuestion& q, std::string_view question,
                      std::vector<Violation>& out) {
  const text::CodepointIndex index(question);
  for (std::size_t i = 0; i < q.tokens.size(); ++i) {
    const Token& t = q.tokens[i];
    auto sub = text::Substr(question, index, t.start, t.end);
    if (!sub || *sub != t.text) {
      out.push_back({ViolationKind::kOffsetMismatch, q.question_id,
                     "token " + std::to_string(i) + " '" + t.text +
                         "' does not match the question at [" +
                         std::to_string(t.start) + ", " + std::to_string(t.end) +
                         ")"});
    }
  }
  for (const auto& e : q.entities) {
    auto sub = text::Substr(question, index, q.EntityStart(e), q.EntityEnd(e));
    if (!sub || *sub != e.surface) {
      out.push_back({ViolationKind::kOffsetMismatch, q.question_id,
                     "entity '" + e.surface + "' does not match the question"});
    }
  }
  bool nfc = text::IsNfc(question);
  for (const auto& t : q.tokens) nfc = nfc && text::IsNfc(t.text);
  for (const auto& e : q.entities) nfc = nfc && text::IsNfc(e.surface);
  if (!nfc) {
    out.push_back({ViolationKind::kNotNfc, q.question_id,
                   "question or annotation text is not NFC-normalized"});
  }
}

void CheckAgainstText(const AnnotatedContext& c, std::string_view context,
                      std::vector<Violation>& out) {
  const text::CodepointIndex index(context);
  for (const auto& e : c.entities) {
    auto sub = text::Substr(context, index, e.start, e.end);
    if (!sub || *sub != e.surface) {
      out.push_back({ViolationKind::kOffsetMismatch, c.context_id,
                     "entity '" + e.surface + "' does not match the context at [" +
                         std::to_string(e.start) + ", " + std::to_string(e.end) +
                         ")"});
    }
  }
  bool nfc = text::IsNfc(context);
  for (const auto& e : c.entities) nfc = nfc && text::IsNfc(e.surface);
  if (!nfc) {
    out.push_back({ViolationKind::kNotNfc, c.context_id,
                   "context or entity text is not NFC-normalized"});
  }
}

}  // namespace

void AnnotationStore::AddQuestion(AnnotatedQuestion q) {
  std::string key = q.question_id;
  if (!questions_.emplace(std::move(key), std::move(q)).second) {
    throw Error(ErrorCode::kSchemaViolation, "duplicate question annotation");
  }
}

void AnnotationStore::AddContext(AnnotatedContext c) {
  std::string key = c.context_id;
  if (!contexts_.emplace(std::move(key), std::move(c)).second) {
    throw Error(ErrorCode::kSchemaViolation, "duplicate context annotation");
  }
}

const AnnotatedQuestion* AnnotationStore::FindQuestion(
    std::string_view question_id) const {
  auto it = questions_.find(std::string(question_id));
  return it == questions_.end() ? nullptr : &it->second;
}

const AnnotatedContext* AnnotationStore::FindContext(
    std::string_view context_id) const {
  auto it = contexts_.find(std::string(context_id));
  return it == contexts_.end() ? nullptr : &it->second;
}

std::string CheckQuestionRecord(const AnnotatedQuestion& q) {
  const std::size_t n = q.tokens.size();
  if (n == 0) return "question has no tokens";
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Token& t = q.tokens[i];
    const std::string at = "token " + std::to_string(i);
    if (t.start >= t.end) return at + ": empty or inverted offsets";
    if (t.end - t.start != text::CodepointLength(t.text)) {
      return at + ": text '" + t.text + "' does not match offsets [" +
             std::to_string(t.start) + ", " + std::to_string(t.end) + ")";
    }
    if (i > 0 && t.start < q.tokens[i - 1].end) {
      return at + ": overlaps the previous token";
    }
    if (t.head >= n) return at + ": head out of range";
    if (t.head == i) ++roots;
    if (t.upos.empty()) return at + ": empty upos";
  }
  if (roots != 1) {
    return "expected exactly one root token, found " + std::to_string(roots);
  }
  for (const auto& e : q.entities) {
    if (e.start_token >= e.end_token || e.end_token > n) {
      return "entity '" + e.surface + "': invalid token range";
    }
    if (e.label.empty()) return "entity '" + e.surface + "': empty label";
    const std::size_t base = q.EntityStart(e);
    if (q.EntityEnd(e) - base != text::CodepointLength(e.surface)) {
      return "entity '" + e.surface + "': surface length does not match tokens";
    }
    const text::CodepointIndex index(e.surface);
    for (std::size_t i = e.start_token; i < e.end_token; ++i) {
      const Token& t = q.tokens[i];
      auto sub = text::Substr(e.surface, index, t.start - base, t.end - base);
      if (!sub || *sub != t.text) {
        return "entity '" + e.surface + "': surface does not match token '" +
               t.text + "'";
      }
    }
  }
  return {};
}

std::string CheckContextRecord(const AnnotatedContext& c) {
  for (const auto& e : c.entities) {
    if (e.start >= e.end) return "entity '" + e.surface + "': empty offsets";
    if (e.end - e.start != text::CodepointLength(e.surface)) {
      return "entity '" + e.surface + "': surface does not match offsets";
    }
    if (e.label.empty()) return "entity '" + e.surface + "': empty label";
  }
  return {};
}

AnnotationStore ParseSidecar(std::istream& in, std::string_view source_name) {
  AnnotationStore store;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kMalformedFile, std::string(source_name) + ":" +
                                                 std::to_string(lineno) + ": " +
                                                 e.what());
    }
    if (!rec.is_object()) RecordError(source_name, lineno, "record is not an object");
    const std::string kind = Str(rec, "kind", source_name, lineno);
    if (kind == "question") {
      AnnotatedQuestion q = ParseQuestionRecord(rec, source_name, lineno);
      if (auto problem = CheckQuestionRecord(q); !problem.empty()) {
        RecordError(source_name, lineno, q.question_id + ": " + problem);
      }
      if (store.FindQuestion(q.question_id)) {
        RecordError(source_name, lineno, "duplicate question " + q.question_id);
      }
      store.AddQuestion(std::move(q));
    } else if (kind == "context") {
      AnnotatedContext c = ParseContextRecord(rec, source_name, lineno);
      if (auto problem = CheckContextRecord(c); !problem.empty()) {
        RecordError(source_name, lineno, c.context_id + ": " + problem);
      }
      if (store.FindContext(c.context_id)) {
        RecordError(source_name, lineno, "duplicate context " + c.context_id);
      }
      store.AddContext(std::move(c));
    } else {
      RecordError(source_name, lineno, "unknown record kind '" + kind + "'");
    }
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIoFailure, "read failed: " + std::string(source_name));
  }
  return store;
}

AnnotationStore LoadSidecar(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  return ParseSidecar(in, path.string());
}

std::string SerializeSidecar(const AnnotationStore& store) {
  std::vector<const AnnotatedQuestion*> questions;
  for (const auto& [id, q] : store.questions()) questions.push_back(&q);
  std::sort(questions.begin(), questions.end(),
            [](auto* a, auto* b) { return a->question_id < b->question_id; });
  std::vector<const AnnotatedContext*> contexts;
  for (const auto& [id, c] : store.contexts()) contexts.push_back(&c);
  std::sort(contexts.begin(), contexts.end(),
            [](auto* a, auto* b) { return a->context_id < b->context_id; });

  std::string out;
  for (const AnnotatedContext* c : contexts) {
    ordered_json rec;
    rec["kind"] = "context";
    rec["context_id"] = c->context_id;
    rec["entities"] = ordered_json::array();
    for (const auto& e : c->entities) {
      rec["entities"].push_back(ordered_json{{"start", e.start},
                                             {"end", e.end},
                                             {"label", e.label},
                                             {"surface", e.surface}});
    }
    out += rec.dump() + "\n";
  }
  for (const AnnotatedQuestion* q : questions) {
    ordered_json rec;
    rec["kind"] = "question";
    rec["question_id"] = q->question_id;
    rec["tokens"] = ordered_json::array();
    for (const auto& t : q->tokens) {
      rec["tokens"].push_back(ordered_json{{"text", t.text},
                                           {"lemma", t.lemma},
                                           {"upos", t.upos},
                                           {"start", t.start},
                                           {"end", t.end},
                                           {"head", t.head},
                                           {"deprel", t.deprel}});
    }
    rec["entities"] = ordered_json::array();
    for (const auto& e : q->entities) {
      rec["entities"].push_back(ordered_json{{"start_token", e.start_token},
                                             {"end_token", e.end_token},
                                             {"label", e.label},
                                             {"surface", e.surface}});
    }
    out += rec.dump() + "\n";
  }
  return out;
}

std::string_view ViolationKindName(ViolationKind k) {
  switch (k) {
    case ViolationKind::kMissingQuestion:
      return "MissingQuestion";
    case ViolationKind::kMissingContext:
      return "MissingContext";
    case ViolationKind::kOffsetMismatch:
      return "OffsetMismatch";
    case ViolationKind::kUnknownQuestion:
      return "UnknownQuestion";
    case ViolationKind::kUnknownContext:
      return "UnknownContext";
    case ViolationKind::kNotNfc:
      return "NotNfc";
  }
  return "Unknown";
}

std::vector<Violation> ValidateAgainst(const AnnotationStore& store,
                                       const QaDataset& d) {
  std::vector<Violation> out;
  std::unordered_set<std::string> corpus_questions;
  std::unordered_set<std::string> corpus_contexts;
  std::unordered_set<std::string> checked_contexts;
  for (const auto& article : d.articles) {
    for (const auto& para : article.paragraphs) {
      corpus_contexts.insert(para.context_id);
      const bool needs_context =
          std::any_of(para.qas.begin(), para.qas.end(),
                      [](const QuestionEntry& e) { return !e.is_impossible; });
      if (needs_context && checked_contexts.insert(para.context_id).second) {
        if (const AnnotatedContext* c = store.FindContext(para.context_id)) {
          CheckAgainstText(*c, para.context, out);
        } else {
          out.push_back({ViolationKind::kMissingContext, para.context_id,
                         "no context annotation"});
        }
      }
      for (const auto& e : para.qas) {
        corpus_questions.insert(e.id);
        if (e.is_impossible) continue;
        if (const AnnotatedQuestion* q = store.FindQuestion(e.id)) {
          CheckAgainstText(*q, e.question, out);
        } else {
          out.push_back({ViolationKind::kMissingQuestion, e.id,
                         "no question annotation"});
        }
      }
    }
  }
  std::set<std::string> unknown_questions;
  for (const auto& [id, q] : store.questions()) {
    if (!corpus_questions.contains(id)) unknown_questions.insert(id);
  }
  for (const auto& id : unknown_questions) {
    out.push_back({ViolationKind::kUnknownQuestion, id,
                   "annotated question is not in the corpus"});
  }
  std::set<std::string> unknown_contexts;
  for (const auto& [id, c] : store.contexts()) {
    if (!corpus_contexts.contains(id)) unknown_contexts.insert(id);
  }
  for (const auto& id : unknown_contexts) {
    out.push_back({ViolationKind::kUnknownContext, id,
                   "annotated context is not in the corpus"});
  }
  return out;
}

}  // namespace swapgen
