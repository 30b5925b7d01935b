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

#ifndef SWAPGEN_CORPUS_IO_H_
#define SWAPGEN_CORPUS_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swapgen {

enum class Provenance { kOriginal, kAntonymAug, kEntityAug };

std::string_view ProvenanceName(Provenance p);

struct AnswerSpan {
  std::string text;
  // Code point offset into the paragraph context.
  std::int64_t answer_start = 0;

  bool operator==(const AnswerSpan&) const = default;
};

struct QuestionEntry {
  std::string id;
  std::string question;
  bool is_impossible = false;
  std::vector<AnswerSpan> answers;
  std::optional<std::vector<AnswerSpan>> plausible_answers;
  Provenance provenance = Provenance::kOriginal;

  bool operator==(const QuestionEntry&) const = default;
};

struct Paragraph {
  std::string context;
  // Hex SHA-256 of `context`; see ContextId().
  std::string context_id;
  std::vector<QuestionEntry> qas;

  bool operator==(const Paragraph&) const = default;
};

struct Article {
  std::string title;
  std::vector<Paragraph> paragraphs;

  bool operator==(const Article&) const = default;
};

struct QaDataset {
  std::string version;
  std::vector<Article> articles;

  std::size_t NumParagraphs() const;
  std::size_t NumQuestions() const;

  bool operator==(const QaDataset&) const = default;
};

// A generated question together with the join key of the paragraph it was
// generated for.
struct GeneratedQuestion {
  std::string context_id;
  QuestionEntry entry;

  bool operator==(const GeneratedQuestion&) const = default;
};

std::string ContextId(std::string_view context);

// "<seed_id>-<strategy>-<k>".
std::string GeneratedId(std::string_view seed_id, std::string_view strategy,
                        std::size_t k);

// Recovers the provenance encoded by GeneratedId(); kOriginal for any other
// id shape.
Provenance ProvenanceFromId(std::string_view id);

// Checks every dataset invariant; throws kSchemaViolation naming the
// article/paragraph/question path of the first violation.
void ValidateDataset(const QaDataset& d);

// Parses SQuAD 2.0 JSON. Assigns context ids, infers provenance of generated
// entries from their ids, and validates all invariants.
QaDataset ParseSquad(std::string_view json_text, std::string_view source_name);
QaDataset LoadSquad(const std::filesystem::path& path);

std::string SerializeSquad(const QaDataset& d);
void WriteSquad(const QaDataset& d, const std::filesystem::path& path);

// Converts the English subset of a TydiQA primary-task JSONL file (plain or
// gzip) into SQuAD 2.0 shape with full-article contexts. Yes/no questions
// and passage-only answers are dropped; questions without any annotated
// answer become unanswerable entries.
QaDataset ConvertTydiQaMinSpan(std::istream& jsonl, std::string_view language,
                               std::string_view source_name);
QaDataset ConvertTydiQaMinSpan(const std::filesystem::path& path,
                               std::string_view language);

// Appends each generated entry to the first paragraph whose context id
// matches. Throws kUnknownContext or kDuplicateId.
QaDataset MergeAugmented(const QaDataset& base,
                         std::span<const GeneratedQuestion> generated);

// Every generated (provenance != kOriginal) entry of `d`, in corpus order.
std::vector<GeneratedQuestion> ExtractGenerated(const QaDataset& d);

// `d` with all generated entries removed.
QaDataset StripGenerated(const QaDataset& d);

// Uniform samples without replacement, one per requested size, in the order
// of `sizes`. Samples are prefixes of a single seeded permutation, so a
// smaller sample is always contained in a larger one. Each sample keeps the
// pool order of its members.
std::vector<std::pair<std::size_t, std::vector<GeneratedQuestion>>> Subsample(
    std::span<const GeneratedQuestion> pool, std::span<const std::size_t> sizes,
    std::uint64_t seed);

}  // namespace swapgen

#endif  // SWAPGEN_CORPUS_IO_H_
