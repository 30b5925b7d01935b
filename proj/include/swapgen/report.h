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

#ifndef SWAPGEN_REPORT_H_
#define SWAPGEN_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "swapgen/corpus_io.h"

namespace swapgen {

// Per-strategy counters collected by an augmentation run.
struct StrategyStats {
  std::size_t seeds_processed = 0;
  std::size_t candidates_generated = 0;
  std::size_t candidates_survived = 0;
  // Seeds skipped because the question starts with an AUX token.
  std::size_t aux_initial = 0;
  // Adjectives dropped for a direct arc to a question word.
  std::size_t wh_adjacent_adjective = 0;
  // Seeds with no eligible token (antonym) or no entity mention (entity).
  std::size_t no_eligible_target = 0;
  // Seeds that had targets but produced no replacement at all.
  std::size_t empty_replacement_pool = 0;

  bool operator==(const StrategyStats&) const = default;
};

struct GenerationReport {
  std::size_t answerable = 0;
  std::size_t unanswerable = 0;
  // Breakdown of `unanswerable` by provenance.
  std::size_t original_unanswerable = 0;
  std::size_t antonym_generated = 0;
  std::size_t entity_generated = 0;

  std::optional<StrategyStats> antonym;
  std::optional<StrategyStats> entity;

  bool operator==(const GenerationReport&) const = default;
};

GenerationReport ReportCounts(const QaDataset& d);

// Accumulates dataset counts (not strategy stats) of `other` into `into`.
void AddCounts(GenerationReport& into, const GenerationReport& other);

std::string RenderTable(const GenerationReport& r, std::string_view label);
std::string RenderJson(const GenerationReport& r);

}  // namespace swapgen

#endif  // SWAPGEN_REPORT_H_
