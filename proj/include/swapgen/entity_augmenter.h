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

#ifndef SWAPGEN_ENTITY_AUGMENTER_H_
#define SWAPGEN_ENTITY_AUGMENTER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swapgen/annotation.h"
#include "swapgen/candidate.h"

namespace swapgen {

// Substring coreference test, case-insensitive: `surface` occurs in the
// question, or it contains or is contained in one of the question's entity
// surfaces. No diacritic folding, so "Beyonce" does not match "Beyoncé".
bool AppearsIn(std::string_view question,
               std::span<const std::string> question_entity_surfaces,
               std::string_view surface);

// Distinct surfaces of context entities with the mention's label that do not
// appear in the question, in order of first occurrence in the context.
std::vector<std::string> ReplacementPool(const AnnotatedQuestion& q,
                                         std::string_view question,
                                         std::size_t mention,
                                         const AnnotatedContext& ctx);

// One candidate per question entity mention and pool surface, ordered by
// mention and then by pool order. Candidate ids are
// GeneratedId(seed.id, "entity", position).
std::vector<Candidate> GenerateEntityCandidates(const SeedRef& seed,
                                                const AnnotatedQuestion& q,
                                                const AnnotatedContext& ctx);

// Uniform pick with `rng_seed`. kMinScore is rejected with kConfigError and
// kNoFilter is handled by the caller.
std::optional<Candidate> SelectEntity(std::span<const Candidate> cands,
                                      FilterStrategy strategy,
                                      std::uint64_t rng_seed);

}  // namespace swapgen

#endif  // SWAPGEN_ENTITY_AUGMENTER_H_
