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

#ifndef SWAPGEN_CANDIDATE_H_
#define SWAPGEN_CANDIDATE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace swapgen {

enum class Strategy { kAntonym, kEntity };

// "antonym" or "entity"; also the strategy tag in generated ids.
std::string_view StrategyName(Strategy s);

enum class FilterStrategy { kNoFilter, kRandom, kMinScore };

// Half-open code point range.
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const CharSpan&) const = default;
};

// One proposed unanswerable question.
struct Candidate {
  // Generated question id; the candidate's position in its seed's list is
  // part of it.
  std::string id;
  std::string seed_id;
  std::string context_id;
  Strategy strategy = Strategy::kAntonym;
  // Replaced range in the seed question.
  CharSpan span;
  std::string original;
  std::string replacement;
  // Seed question with `span` replaced by `replacement`.
  std::string text;

  bool operator==(const Candidate&) const = default;
};

// `question` with the code point range `span` replaced.
std::string ApplySwap(std::string_view question, CharSpan span,
                      std::string_view replacement);

// What an augmenter needs to know about a seed question.
struct SeedRef {
  std::string id;
  std::string question;
  std::string context_id;
};

}  // namespace swapgen

#endif  // SWAPGEN_CANDIDATE_H_
