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

#include "swapgen/antonym_augmenter.h"

#include <array>
#include <cmath>

#include "swapgen/corpus_io.h"
#include "swapgen/errors.h"
#include "swapgen/hashing.h"
#include "swapgen/text.h"

namespace swapgen {
namespace {

constexpr std::array<std::string_view, 9> kWhLemmas = {
    "how", "what", "which", "who", "whom", "whose", "when", "where", "why"};

// Relative score difference below which two candidates count as tied, so
// that rounding in a sum of logs cannot reorder analytically equal scores.
constexpr double kTieTolerance = 1e-12;

bool IsSwappablePos(std::string_view upos) {
  return upos == "NOUN" || upos == "ADJ" || upos == "VERB";
}

bool HasWhArc(const AnnotatedQuestion& q, std::size_t i) {
  const auto& tokens = q.tokens;
  if (tokens[i].head != i && IsWhLemma(tokens[tokens[i].head].lemma)) return true;
  for (std::size_t j = 0; j < tokens.size(); ++j) {
    if (j != i && tokens[j].head == i && IsWhLemma(tokens[j].lemma)) return true;
  }
  return false;
}

}  // namespace

bool IsExcludedQuestion(const AnnotatedQuestion& q) {
  return !q.tokens.empty() && q.tokens.front().upos == "AUX";
}

bool IsWhLemma(std::string_view lemma) {
  const std::string lower = text::ToLower(lemma);
  for (auto wh : kWhLemmas) {
    if (lower == wh) return true;
  }
  return false;
}

TargetScan ScanTargets(const AnnotatedQuestion& q) {
  TargetScan scan;
  for (std::size_t i = 0; i < q.tokens.size(); ++i) {
    const Token& t = q.tokens[i];
    if (!IsSwappablePos(t.upos)) continue;
    if (text::ToLower(t.text) != text::ToLower(t.lemma)) continue;
    if (t.upos == "ADJ" && HasWhArc(q, i)) {
      ++scan.wh_adjacent_adjectives;
      continue;
    }
    scan.eligible.push_back(i);
  }
  return scan;
}

std::vector<std::size_t> EligibleTargets(const AnnotatedQuestion& q) {
  return ScanTargets(q).eligible;
}

std::vector<Candidate> GenerateAntonymCandidates(const SeedRef& seed,
                                                 const AnnotatedQuestion& q,
                                                 const WordNetDb& db,
                                                 AntonymScope scope) {
  std::vector<Candidate> out;
  for (const std::size_t i : EligibleTargets(q)) {
    const Token& t = q.tokens[i];
    for (const auto& antonym : db.Antonyms(t.lemma, t.upos, scope)) {
      std::string replacement = text::MatchInitialCase(t.text, antonym);
      if (replacement == t.text) continue;
      Candidate c;
      c.id = GeneratedId(seed.id, StrategyName(Strategy::kAntonym), out.size());
      c.seed_id = seed.id;
      c.context_id = seed.context_id;
      c.strategy = Strategy::kAntonym;
      c.span = {t.start, t.end};
      c.original = t.text;
      c.text = ApplySwap(seed.question, c.span, replacement);
      c.replacement = std::move(replacement);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<Candidate> SelectAntonym(std::span<const Candidate> cands,
                                       const FluencyScorer* scorer,
                                       FilterStrategy strategy,
                                       std::uint64_t rng_seed) {
  if (strategy == FilterStrategy::kNoFilter) {
    throw Error(ErrorCode::kConfigError,
                "no selection step when filtering is disabled");
  }
  if (cands.empty()) return std::nullopt;
  if (strategy == FilterStrategy::kRandom) {
    SeededRng rng(rng_seed);
    return cands[rng.Below(cands.size())];
  }
  if (scorer == nullptr) {
    throw Error(ErrorCode::kConfigError, "score-based selection needs a scorer");
  }
  const std::vector<double> scores = scorer->ScoreAll(cands);
  std::size_t best = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i]) || scores[i] < 0) {
      throw Error(ErrorCode::kScorerFailure,
                  "invalid score " + std::to_string(scores[i]) + " for " +
                      cands[i].id);
    }
    if (scores[i] < scores[best] * (1 - kTieTolerance)) best = i;
  }
  return cands[best];
}

}  // namespace swapgen
