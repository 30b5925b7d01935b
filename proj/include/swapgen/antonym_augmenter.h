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

#ifndef SWAPGEN_ANTONYM_AUGMENTER_H_
#define SWAPGEN_ANTONYM_AUGMENTER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swapgen/annotation.h"
#include "swapgen/candidate.h"
#include "swapgen/scoring.h"
#include "swapgen/wordnet.h"

namespace swapgen {

// True when the first token is tagged AUX, which catches most polar and
// alternative questions.
bool IsExcludedQuestion(const AnnotatedQuestion& q);

// how, what, which, who, whom, whose, when, where, why.
bool IsWhLemma(std::string_view lemma);

struct TargetScan {
  std::vector<std::size_t> eligible;
  // Adjectives that passed the lemma test but sit on a direct dependency
  // arc with a question word.
  std::size_t wh_adjacent_adjectives = 0;
};

// Tokens that may be swapped: NOUN, ADJ or VERB whose text equals its lemma
// ignoring case; adjectives attached to or heading a question word are
// skipped.
TargetScan ScanTargets(const AnnotatedQuestion& q);
std::vector<std::size_t> EligibleTargets(const AnnotatedQuestion& q);

// One candidate per eligible token and antonym, ordered by token index and
// then by antonym. The replacement copies the case of the token's first
// letter. Candidate ids are GeneratedId(seed.id, "antonym", position).
std::vector<Candidate> GenerateAntonymCandidates(
    const SeedRef& seed, const AnnotatedQuestion& q, const WordNetDb& db,
    AntonymScope scope = AntonymScope::kSynset);

// kMinScore picks the lowest score, earliest candidate on ties (scores
// within a relative 1e-12 are tied); kRandom draws uniformly with
// `rng_seed`. kNoFilter is handled by the caller and is rejected here with
// kConfigError. Throws kScorerFailure for a negative or non-finite score.
std::optional<Candidate> SelectAntonym(std::span<const Candidate> cands,
                                       const FluencyScorer* scorer,
                                       FilterStrategy strategy,
                                       std::uint64_t rng_seed);

}  // namespace swapgen

#endif  // SWAPGEN_ANTONYM_AUGMENTER_H_
