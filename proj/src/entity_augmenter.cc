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

#include "swapgen/entity_augmenter.h"

#include <algorithm>
#include <set>

#include "swapgen/corpus_io.h"
#include "swapgen/errors.h"
#include "swapgen/hashing.h"
#include "swapgen/text.h"

namespace swapgen {
namespace {

std::vector<std::string> Surfaces(const AnnotatedQuestion& q) {
  std::vector<std::string> out;
  out.reserve(q.entities.size());
  for (const auto& e : q.entities) out.push_back(e.surface);
  return out;
}

bool CoRefers(std::string_view a, std::string_view b) {
  return text::ContainsCaseless(a, b) || text::ContainsCaseless(b, a);
}

}  // namespace

bool AppearsIn(std::string_view question,
               std::span<const std::string> question_entity_surfaces,
               std::string_view surface) {
  if (text::ContainsCaseless(question, surface)) return true;
  for (const auto& e : question_entity_surfaces) {
    if (CoRefers(e, surface)) return true;
  }
  return false;
}

std::vector<std::string> ReplacementPool(const AnnotatedQuestion& q,
                                         std::string_view question,
                                         std::size_t mention,
                                         const AnnotatedContext& ctx) {
  const QuestionEntity& m = q.entities.at(mention);
  const std::vector<std::string> surfaces = Surfaces(q);
  std::vector<const ContextEntity*> ordered;
  for (const auto& e : ctx.entities) ordered.push_back(&e);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](auto* a, auto* b) { return a->start < b->start; });
  std::vector<std::string> pool;
  std::set<std::string> seen;
  for (const ContextEntity* e : ordered) {
    if (e->label != m.label) continue;
    if (AppearsIn(question, surfaces, e->surface)) continue;
    if (CoRefers(m.surface, e->surface)) continue;
    if (seen.insert(e->surface).second) pool.push_back(e->surface);
  }
  return pool;
}

std::vector<Candidate> GenerateEntityCandidates(const SeedRef& seed,
                                                const AnnotatedQuestion& q,
                                                const AnnotatedContext& ctx) {
  std::vector<Candidate> out;
  for (std::size_t m = 0; m < q.entities.size(); ++m) {
    const QuestionEntity& e = q.entities[m];
    for (auto& surface : ReplacementPool(q, seed.question, m, ctx)) {
      Candidate c;
      c.id = GeneratedId(seed.id, StrategyName(Strategy::kEntity), out.size());
      c.seed_id = seed.id;
      c.context_id = seed.context_id;
      c.strategy = Strategy::kEntity;
      c.span = {q.EntityStart(e), q.EntityEnd(e)};
      c.original = e.surface;
      c.text = ApplySwap(seed.question, c.span, surface);
      c.replacement = std::move(surface);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<Candidate> SelectEntity(std::span<const Candidate> cands,
                                      FilterStrategy strategy,
                                      std::uint64_t rng_seed) {
  if (strategy == FilterStrategy::kMinScore) {
    throw Error(ErrorCode::kConfigError,
                "entity swaps support random selection only");
  }
  if (strategy == FilterStrategy::kNoFilter) {
    throw Error(ErrorCode::kConfigError,
                "no selection step when filtering is disabled");
  }
  if (cands.empty()) return std::nullopt;
  SeededRng rng(rng_seed);
  return cands[rng.Below(cands.size())];
}

}  // namespace swapgen
