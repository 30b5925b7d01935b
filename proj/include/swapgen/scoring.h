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

#ifndef SWAPGEN_SCORING_H_
#define SWAPGEN_SCORING_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "swapgen/candidate.h"

namespace swapgen {

// Maps a candidate to a nonnegative score; lower means more fluent. Only
// the ordering of scores is used.
class FluencyScorer {
 public:
  virtual ~FluencyScorer() = default;
  virtual double Score(std::string_view candidate_id,
                       std::string_view text) const = 0;
  std::vector<double> ScoreAll(std::span<const Candidate> cands) const;
};

// Add-k smoothed n-gram model over lowercased word tokens. Sentences are
// left-padded with order-1 "<s>" symbols and end with a predicted "</s>";
// tokens outside the training vocabulary are scored as "<unk>".
class NgramModel {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";
  static constexpr std::string_view kUnk = "<unk>";

  // Throws kEmptyCorpus for an empty corpus and kConfigError for order < 1
  // or k <= 0.
  static NgramModel Train(std::span<const std::string> corpus, int order = 3,
                          double k = 0.1);

  // Lowercases, splits on whitespace and makes every punctuation character
  // a token of its own.
  static std::vector<std::string> Tokenize(std::string_view text);

  // P(word | history). Only the last order-1 history tokens are used; a
  // shorter history is left-padded with "<s>". Unknown tokens, in the
  // history or as `word`, map to "<unk>".
  double Probability(std::span<const std::string> history,
                     std::string_view word) const;

  // Training count of an n-gram of exactly `order` tokens, and of a history
  // of order-1 tokens (the sum of counts of its continuations).
  std::size_t Count(std::span<const std::string> ngram) const;
  std::size_t HistoryCount(std::span<const std::string> history) const;

  // Training word types plus "<unk>" and "</s>".
  std::size_t VocabularySize() const { return words_.size() - 1; }
  // The outcomes Probability() distributes mass over, sorted.
  std::vector<std::string> Outcomes() const;

  // exp(-mean log P) over the tokens of `text` and the final "</s>".
  double Perplexity(std::string_view text) const;

  int order() const { return order_; }
  double k() const { return k_; }

 private:
  std::uint32_t Id(std::string_view token) const;
  std::string Key(std::span<const std::uint32_t> ids) const;
  double ProbabilityOfIds(std::span<const std::uint32_t> context) const;

  int order_ = 3;
  double k_ = 0.1;
  // words_[0] is "<s>", [1] "</s>", [2] "<unk>".
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::unordered_map<std::string, std::size_t> ngram_counts_;
  std::unordered_map<std::string, std::size_t> history_counts_;
};

class NgramScorer : public FluencyScorer {
 public:
  explicit NgramScorer(NgramModel model) : model_(std::move(model)) {}
  double Score(std::string_view, std::string_view text) const override {
    return model_.Perplexity(text);
  }
  const NgramModel& model() const { return model_; }

 private:
  NgramModel model_;
};

// Scores computed elsewhere, read from "key<TAB>score" rows. Keys are
// candidate ids; lookups fall back to the candidate text.
class ExternalScoreTable {
 public:
  // Throws kMalformedFile, or kDuplicateKey for a repeated key.
  static ExternalScoreTable Parse(std::istream& in, std::string_view source_name);
  static ExternalScoreTable Load(const std::filesystem::path& path);

  // Throws kMissingScore when neither key is present.
  double Lookup(std::string_view candidate_id, std::string_view text) const;

  std::size_t size() const { return scores_.size(); }
  bool empty() const { return scores_.empty(); }

 private:
  std::unordered_map<std::string, double> scores_;
};

class ExternalScorer : public FluencyScorer {
 public:
  explicit ExternalScorer(ExternalScoreTable table) : table_(std::move(table)) {}
  double Score(std::string_view candidate_id,
               std::string_view text) const override {
    return table_.Lookup(candidate_id, text);
  }

 private:
  ExternalScoreTable table_;
};

}  // namespace swapgen

#endif  // SWAPGEN_SCORING_H_
