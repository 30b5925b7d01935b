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

#include "swapgen/scoring.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "swapgen/errors.h"
#include "swapgen/text.h"

namespace swapgen {

std::vector<double> FluencyScorer::ScoreAll(std::span<const Candidate> cands) const {
  std::vector<double> out;
  out.reserve(cands.size());
  for (const auto& c : cands) out.push_back(Score(c.id, c.text));
  return out;
}

std::vector<std::string> NgramModel::Tokenize(std::string_view text) {
  const std::string lower = text::ToLower(text);
  std::vector<std::string> out;
  std::string current;
  const auto* s = reinterpret_cast<const uint8_t*>(lower.data());
  const auto length = static_cast<int32_t>(lower.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0 || u_isUWhiteSpace(c)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else if (u_ispunct(c)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
      out.emplace_back(lower.substr(start, i - start));
    } else {
      current.append(lower, start, i - start);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

NgramModel NgramModel::Train(std::span<const std::string> corpus, int order,
                             double k) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "n-gram corpus is empty");
  if (order < 1) throw Error(ErrorCode::kConfigError, "n-gram order must be >= 1");
  if (!(k > 0) || !std::isfinite(k)) {
    throw Error(ErrorCode::kConfigError, "smoothing k must be positive");
  }
  NgramModel m;
  m.order_ = order;
  m.k_ = k;
  for (auto sym : {kBos, kEos, kUnk}) {
    m.ids_.emplace(std::string(sym), static_cast<std::uint32_t>(m.words_.size()));
    m.words_.emplace_back(sym);
  }
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> types;
  for (const auto& line : corpus) {
    sentences.push_back(Tokenize(line));
    for (const auto& t : sentences.back()) types.push_back(t);
  }
  if (types.empty()) throw Error(ErrorCode::kEmptyCorpus, "n-gram corpus has no tokens");
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  for (auto& t : types) {
    if (m.ids_.contains(t)) continue;
    m.ids_.emplace(t, static_cast<std::uint32_t>(m.words_.size()));
    m.words_.push_back(std::move(t));
  }
  const std::size_t h = static_cast<std::size_t>(order - 1);
  for (const auto& sentence : sentences) {
    std::vector<std::uint32_t> ids(h, 0);
    for (const auto& t : sentence) ids.push_back(m.Id(t));
    ids.push_back(1);
    for (std::size_t i = h; i < ids.size(); ++i) {
      std::span<const std::uint32_t> gram(ids.data() + i - h, h + 1);
      ++m.ngram_counts_[m.Key(gram)];
      ++m.history_counts_[m.Key(gram.first(h))];
    }
  }
  return m;
}

std::uint32_t NgramModel::Id(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? 2 : it->second;
}

std::string NgramModel::Key(std::span<const std::uint32_t> ids) const {
  std::string key(ids.size() * sizeof(std::uint32_t), '\0');
  std::copy_n(reinterpret_cast<const char*>(ids.data()), key.size(), key.data());
  return key;
}

double NgramModel::ProbabilityOfIds(std::span<const std::uint32_t> context) const {
  const std::size_t h = static_cast<std::size_t>(order_ - 1);
  auto count_of = [](const auto& table, const std::string& key) -> double {
    auto it = table.find(key);
    return it == table.end() ? 0.0 : static_cast<double>(it->second);
  };
  const double joint = count_of(ngram_counts_, Key(context));
  const double hist = count_of(history_counts_, Key(context.first(h)));
  return (joint + k_) / (hist + k_ * static_cast<double>(VocabularySize()));
}

double NgramModel::Probability(std::span<const std::string> history,
                               std::string_view word) const {
  const std::size_t h = static_cast<std::size_t>(order_ - 1);
  std::vector<std::uint32_t> context;
  const std::size_t used = std::min(h, history.size());
  context.assign(h - used, 0);
  for (std::size_t i = history.size() - used; i < history.size(); ++i) {
    context.push_back(Id(history[i]));
  }
  context.push_back(Id(word));
  return ProbabilityOfIds(context);
}

std::size_t NgramModel::Count(std::span<const std::string> ngram) const {
  std::vector<std::uint32_t> ids;
  for (const auto& t : ngram) ids.push_back(Id(t));
  auto it = ngram_counts_.find(Key(ids));
  return it == ngram_counts_.end() ? 0 : it->second;
}

std::size_t NgramModel::HistoryCount(std::span<const std::string> history) const {
  std::vector<std::uint32_t> ids;
  for (const auto& t : history) ids.push_back(Id(t));
  auto it = history_counts_.find(Key(ids));
  return it == history_counts_.end() ? 0 : it->second;
}

std::vector<std::string> NgramModel::Outcomes() const {
  std::vector<std::string> out(words_.begin() + 1, words_.end());
  std::sort(out.begin(), out.end());
  return out;
}

double NgramModel::Perplexity(std::string_view text) const {
  const std::size_t h = static_cast<std::size_t>(order_ - 1);
  std::vector<std::uint32_t> ids(h, 0);
  for (const auto& t : Tokenize(text)) ids.push_back(Id(t));
  ids.push_back(1);
  double log_sum = 0;
  for (std::size_t i = h; i < ids.size(); ++i) {
    log_sum += std::log(ProbabilityOfIds({ids.data() + i - h, h + 1}));
  }
  return std::exp(-log_sum / static_cast<double>(ids.size() - h));
}

ExternalScoreTable ExternalScoreTable::Parse(std::istream& in,
                                             std::string_view source_name) {
  ExternalScoreTable table;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](ErrorCode code, const std::string& what) {
    throw Error(code, std::string(source_name) + ":" + std::to_string(lineno) +
                          ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string::npos) {
      fail(ErrorCode::kMalformedFile, "expected '<candidate_id>\\t<score>'");
    }
    const std::string_view field = std::string_view(line).substr(tab + 1);
    double score = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), score);
    if (ec != std::errc() || ptr != field.data() + field.size() ||
        !std::isfinite(score) || score < 0) {
      fail(ErrorCode::kMalformedFile,
           "score must be a nonnegative decimal, got '" + std::string(field) + "'");
    }
    if (!table.scores_.emplace(line.substr(0, tab), score).second) {
      fail(ErrorCode::kDuplicateKey, "duplicate key '" + line.substr(0, tab) + "'");
    }
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIoFailure, "read failed: " + std::string(source_name));
  }
  return table;
}

ExternalScoreTable ExternalScoreTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  return Parse(in, path.string());
}

double ExternalScoreTable::Lookup(std::string_view candidate_id,
                                  std::string_view text) const {
  if (auto it = scores_.find(std::string(candidate_id)); it != scores_.end()) {
    return it->second;
  }
  if (auto it = scores_.find(std::string(text)); it != scores_.end()) {
    return it->second;
  }
  throw Error(ErrorCode::kMissingScore,
              "no score for candidate " + std::string(candidate_id));
}

}  // namespace swapgen
