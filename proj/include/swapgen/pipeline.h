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

#ifndef SWAPGEN_PIPELINE_H_
#define SWAPGEN_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swapgen/annotation.h"
#include "swapgen/candidate.h"
#include "swapgen/corpus_io.h"
#include "swapgen/report.h"
#include "swapgen/scoring.h"
#include "swapgen/wordnet.h"

namespace swapgen {

enum class RunStrategy { kAntonym, kEntity, kBoth };

RunStrategy ParseRunStrategy(std::string_view s);
FilterStrategy ParseFilter(std::string_view s);
AntonymScope ParseAntonymScope(std::string_view s);
std::string_view FilterName(FilterStrategy f);

struct AugmentOptions {
  RunStrategy strategy = RunStrategy::kAntonym;
  // Unset means the default for each strategy: lowest score for antonyms,
  // random for entities.
  std::optional<FilterStrategy> filter;
  std::uint64_t seed = 0;
  AntonymScope antonym_scope = AntonymScope::kSynset;
  int ngram_order = 3;
  double ngram_k = 0.1;
};

// Throws kConfigError for invalid combinations.
void CheckOptions(const AugmentOptions& opts);

struct AugmentResult {
  QaDataset augmented;
  // Emitted questions in output order: all antonym outputs, then all entity
  // outputs, each in corpus order.
  std::vector<GeneratedQuestion> generated;
  // Every candidate before selection, in the same order.
  std::vector<Candidate> candidates;
  GenerationReport report;
};

// Augments every answerable question of `corpus`. `db` is required for
// antonym swaps. When `scorer` is null and scores are needed, an n-gram
// model trained on the answerable questions of `corpus` is used.
AugmentResult Augment(const QaDataset& corpus, const AnnotationStore& store,
                      const WordNetDb* db, const AugmentOptions& opts,
                      const FluencyScorer* scorer = nullptr);

// Rows "<candidate_id>\t<text>\n"; the input format of external scorers.
std::string SerializeCandidates(std::span<const Candidate> cands);

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path sidecar;
  std::filesystem::path wordnet_dir;
  AugmentOptions options;
  // "ngram" or "external:<path>".
  std::string scorer = "ngram";
  std::filesystem::path out;
  std::filesystem::path report;
  std::filesystem::path candidates_out;
};

struct RunOutcome {
  // Non-empty when the sidecar does not cover the corpus; nothing is
  // generated or written in that case.
  std::vector<Violation> violations;
  std::optional<AugmentResult> result;
};

// Loads inputs, validates, augments and writes every configured output.
RunOutcome RunAugment(const RunConfig& cfg);

// Splits an augmented corpus into its original part and its generated pool
// (optionally only one strategy's entries) and writes one merged file per
// size to `out_dir` as subsample-<size>.json. Returns the written paths.
std::vector<std::filesystem::path> RunSubsample(
    const std::filesystem::path& corpus, std::span<const std::size_t> sizes,
    std::uint64_t seed, const std::filesystem::path& out_dir,
    std::optional<Provenance> only = std::nullopt);

// Counts of a corpus file; a zero-byte file is an empty corpus.
GenerationReport RunReport(const std::filesystem::path& corpus);

}  // namespace swapgen

#endif  // SWAPGEN_PIPELINE_H_
