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

#ifndef SWAPGEN_ANNOTATION_H_
#define SWAPGEN_ANNOTATION_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "swapgen/corpus_io.h"

namespace swapgen {

// One token of an annotated question. Offsets are code points into the
// question string; `head` is a token index (the root points at itself).
struct Token {
  std::string text;
  std::string lemma;
  std::string upos;
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t head = 0;
  std::string deprel;

  bool operator==(const Token&) const = default;
};

// Entity mention inside a question, as a half-open token range.
struct QuestionEntity {
  std::size_t start_token = 0;
  std::size_t end_token = 0;
  std::string label;
  std::string surface;

  bool operator==(const QuestionEntity&) const = default;
};

// Entity mention inside a context, as a half-open code point range.
struct ContextEntity {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string label;
  std::string surface;

  bool operator==(const ContextEntity&) const = default;
};

struct AnnotatedQuestion {
  std::string question_id;
  std::vector<Token> tokens;
  std::vector<QuestionEntity> entities;

  // Code point span of an entity mention in the question string.
  std::size_t EntityStart(const QuestionEntity& e) const {
    return tokens[e.start_token].start;
  }
  std::size_t EntityEnd(const QuestionEntity& e) const {
    return tokens[e.end_token - 1].end;
  }

  bool operator==(const AnnotatedQuestion&) const = default;
};

struct AnnotatedContext {
  std::string context_id;
  std::vector<ContextEntity> entities;

  bool operator==(const AnnotatedContext&) const = default;
};

class AnnotationStore {
 public:
  // Throws kSchemaViolation if the key is already present.
  void AddQuestion(AnnotatedQuestion q);
  void AddContext(AnnotatedContext c);

  const AnnotatedQuestion* FindQuestion(std::string_view question_id) const;
  const AnnotatedContext* FindContext(std::string_view context_id) const;

  const std::unordered_map<std::string, AnnotatedQuestion>& questions() const {
    return questions_;
  }
  const std::unordered_map<std::string, AnnotatedContext>& contexts() const {
    return contexts_;
  }

  bool empty() const { return questions_.empty() && contexts_.empty(); }

  bool operator==(const AnnotationStore&) const = default;

 private:
  std::unordered_map<std::string, AnnotatedQuestion> questions_;
  std::unordered_map<std::string, AnnotatedContext> contexts_;
};

// Checks the record-local invariants of a question annotation (offsets
// consistent with token texts, valid heads, a single root, entity ranges).
// Returns an empty string when valid, otherwise a description.
std::string CheckQuestionRecord(const AnnotatedQuestion& q);
std::string CheckContextRecord(const AnnotatedContext& c);

// Sidecar JSONL: one "question" or "context" record per line. Blank lines
// and lines starting with '#' are ignored.
AnnotationStore ParseSidecar(std::istream& in, std::string_view source_name);
AnnotationStore LoadSidecar(const std::filesystem::path& path);

std::string SerializeSidecar(const AnnotationStore& store);

enum class ViolationKind {
  kMissingQuestion,
  kMissingContext,
  kOffsetMismatch,
  kUnknownQuestion,
  kUnknownContext,
  kNotNfc,
};

std::string_view ViolationKindName(ViolationKind k);

struct Violation {
  ViolationKind kind;
  // Question id or context id the violation is about.
  std::string id;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

// Cross-checks a store against a corpus. Only answerable questions and the
// contexts that hold them need annotation. The result is ordered by corpus
// position, then by store id, so it is stable across runs.
std::vector<Violation> ValidateAgainst(const AnnotationStore& store,
                                       const QaDataset& d);

}  // namespace swapgen

#endif  // SWAPGEN_ANNOTATION_H_
