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

#include "swapgen/pipeline.h"

#include <fstream>
#include <memory>

#include "swapgen/antonym_augmenter.h"
#include "swapgen/entity_augmenter.h"
#include "swapgen/errors.h"
#include "swapgen/hashing.h"

namespace swapgen {
namespace {

struct Seed {
  SeedRef ref;
  const AnnotatedQuestion* question;
  const AnnotatedContext* context;
};

std::vector<Seed> CollectSeeds(const QaDataset& corpus,
                               const AnnotationStore& store) {
  std::vector<Seed> seeds;
  for (const auto& article : corpus.articles) {
    for (const auto& para : article.paragraphs) {
      for (const auto& e : para.qas) {
        if (e.is_impossible) continue;
        const AnnotatedQuestion* q = store.FindQuestion(e.id);
        if (!q) {
          throw Error(ErrorCode::kSchemaViolation,
                      "no annotation for question " + e.id);
        }
        seeds.push_back({{e.id, e.question, para.context_id},
                         q,
                         store.FindContext(para.context_id)});
      }
    }
  }
  return seeds;
}

GeneratedQuestion ToGenerated(const Candidate& c) {
  QuestionEntry entry;
  entry.id = c.id;
  entry.question = c.text;
  entry.is_impossible = true;
  entry.provenance = c.strategy == Strategy::kAntonym ? Provenance::kAntonymAug
                                                      : Provenance::kEntityAug;
  return {c.context_id, std::move(entry)};
}

// Runs `body` and re-raises its errors with the seed id attached.
template <typename Fn>
auto ForSeed(const Seed& seed, Fn&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.code(), "question " + seed.ref.id + ": " + e.detail());
  }
}

void Emit(std::vector<Candidate>&& cands, FilterStrategy filter,
          const std::optional<Candidate>& picked, StrategyStats& stats,
          AugmentResult& out) {
  stats.candidates_generated += cands.size();
  if (filter == FilterStrategy::kNoFilter) {
    for (const auto& c : cands) out.generated.push_back(ToGenerated(c));
    stats.candidates_survived += cands.size();
  } else if (picked) {
    out.generated.push_back(ToGenerated(*picked));
    ++stats.candidates_survived;
  }
  for (auto& c : cands) out.candidates.push_back(std::move(c));
}

void RunAntonym(const std::vector<Seed>& seeds, const WordNetDb& db,
                const AugmentOptions& opts, FilterStrategy filter,
                const FluencyScorer* scorer, AugmentResult& out) {
  StrategyStats stats;
  for (const Seed& seed : seeds) {
    ++stats.seeds_processed;
    if (IsExcludedQuestion(*seed.question)) {
      ++stats.aux_initial;
      continue;
    }
    const TargetScan scan = ScanTargets(*seed.question);
    stats.wh_adjacent_adjective += scan.wh_adjacent_adjectives;
    if (scan.eligible.empty()) {
      ++stats.no_eligible_target;
      continue;
    }
    ForSeed(seed, [&] {
      auto cands = GenerateAntonymCandidates(seed.ref, *seed.question, db,
                                             opts.antonym_scope);
      if (cands.empty()) {
        ++stats.empty_replacement_pool;
        return;
      }
      std::optional<Candidate> picked;
      if (filter != FilterStrategy::kNoFilter) {
        picked = SelectAntonym(cands, scorer, filter,
                               DeriveSeed(opts.seed, seed.ref.id));
      }
      Emit(std::move(cands), filter, picked, stats, out);
    });
  }
  out.report.antonym = stats;
}

void RunEntity(const std::vector<Seed>& seeds, const AugmentOptions& opts,
               FilterStrategy filter, AugmentResult& out) {
  StrategyStats stats;
  const AnnotatedContext empty_context;
  for (const Seed& seed : seeds) {
    ++stats.seeds_processed;
    if (seed.question->entities.empty()) {
      ++stats.no_eligible_target;
      continue;
    }
    ForSeed(seed, [&] {
      const AnnotatedContext& ctx = seed.context ? *seed.context : empty_context;
      auto cands = GenerateEntityCandidates(seed.ref, *seed.question, ctx);
      if (cands.empty()) {
        ++stats.empty_replacement_pool;
        return;
      }
      std::optional<Candidate> picked;
      if (filter != FilterStrategy::kNoFilter) {
        picked = SelectEntity(cands, filter, DeriveSeed(opts.seed, seed.ref.id));
      }
      Emit(std::move(cands), filter, picked, stats, out);
    });
  }
  out.report.entity = stats;
}

void WriteText(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path.string());
}

}  // namespace

RunStrategy ParseRunStrategy(std::string_view s) {
  if (s == "antonym") return RunStrategy::kAntonym;
  if (s == "entity") return RunStrategy::kEntity;
  if (s == "both") return RunStrategy::kBoth;
  throw Error(ErrorCode::kConfigError, "unknown strategy '" + std::string(s) + "'");
}

FilterStrategy ParseFilter(std::string_view s) {
  if (s == "none") return FilterStrategy::kNoFilter;
  if (s == "random") return FilterStrategy::kRandom;
  if (s == "ppl") return FilterStrategy::kMinScore;
  throw Error(ErrorCode::kConfigError, "unknown filter '" + std::string(s) + "'");
}

AntonymScope ParseAntonymScope(std::string_view s) {
  if (s == "lemma") return AntonymScope::kLemma;
  if (s == "synset") return AntonymScope::kSynset;
  throw Error(ErrorCode::kConfigError,
              "unknown antonym scope '" + std::string(s) + "'");
}

std::string_view FilterName(FilterStrategy f) {
  switch (f) {
    case FilterStrategy::kNoFilter:
      return "none";
    case FilterStrategy::kRandom:
      return "random";
    case FilterStrategy::kMinScore:
      return "ppl";
  }
  return "none";
}

void CheckOptions(const AugmentOptions& opts) {
  if (opts.strategy != RunStrategy::kAntonym &&
      opts.filter == FilterStrategy::kMinScore) {
    throw Error(ErrorCode::kConfigError,
                "entity swaps cannot be filtered by perplexity");
  }
  if (opts.ngram_order < 1 || !(opts.ngram_k > 0)) {
    throw Error(ErrorCode::kConfigError, "invalid n-gram settings");
  }
}

AugmentResult Augment(const QaDataset& corpus, const AnnotationStore& store,
                      const WordNetDb* db, const AugmentOptions& opts,
                      const FluencyScorer* scorer) {
  CheckOptions(opts);
  const bool antonym = opts.strategy != RunStrategy::kEntity;
  const bool entity = opts.strategy != RunStrategy::kAntonym;
  if (antonym && db == nullptr) {
    throw Error(ErrorCode::kConfigError, "antonym swaps need a WordNet database");
  }
  const FilterStrategy antonym_filter =
      opts.filter.value_or(FilterStrategy::kMinScore);
  const FilterStrategy entity_filter = opts.filter.value_or(FilterStrategy::kRandom);

  const std::vector<Seed> seeds = CollectSeeds(corpus, store);
  std::unique_ptr<NgramScorer> ngram;
  if (antonym && antonym_filter == FilterStrategy::kMinScore && !scorer &&
      !seeds.empty()) {
    std::vector<std::string> sentences;
    sentences.reserve(seeds.size());
    for (const auto& s : seeds) sentences.push_back(s.ref.question);
    ngram = std::make_unique<NgramScorer>(
        NgramModel::Train(sentences, opts.ngram_order, opts.ngram_k));
    scorer = ngram.get();
  }

  AugmentResult out;
  if (antonym) RunAntonym(seeds, *db, opts, antonym_filter, scorer, out);
  if (entity) RunEntity(seeds, opts, entity_filter, out);
  out.augmented = MergeAugmented(corpus, out.generated);
  GenerationReport counts = ReportCounts(out.augmented);
  counts.antonym = out.report.antonym;
  counts.entity = out.report.entity;
  out.report = std::move(counts);
  return out;
}

std::string SerializeCandidates(std::span<const Candidate> cands) {
  std::string out;
  for (const auto& c : cands) {
    out += c.id;
    out += '\t';
    out += c.text;
    out += '\n';
  }
  return out;
}

RunOutcome RunAugment(const RunConfig& cfg) {
  CheckOptions(cfg.options);
  const bool antonym = cfg.options.strategy != RunStrategy::kEntity;
  std::unique_ptr<FluencyScorer> scorer;
  constexpr std::string_view kExternal = "external:";
  if (cfg.scorer.rfind(kExternal, 0) == 0) {
    const std::string path = cfg.scorer.substr(kExternal.size());
    if (path.empty()) throw Error(ErrorCode::kConfigError, "external scorer needs a path");
    scorer = std::make_unique<ExternalScorer>(ExternalScoreTable::Load(path));
  } else if (cfg.scorer != "ngram") {
    throw Error(ErrorCode::kConfigError, "unknown scorer '" + cfg.scorer + "'");
  }
  if (antonym && cfg.wordnet_dir.empty()) {
    throw Error(ErrorCode::kConfigError, "antonym swaps need --wordnet-dir");
  }

  const QaDataset corpus = LoadSquad(cfg.corpus);
  const AnnotationStore store = LoadSidecar(cfg.sidecar);
  RunOutcome outcome;
  outcome.violations = ValidateAgainst(store, corpus);
  if (!outcome.violations.empty()) return outcome;

  std::optional<WordNetDb> db;
  if (antonym) db = WordNetDb::Load(cfg.wordnet_dir);
  AugmentResult result =
      Augment(corpus, store, db ? &*db : nullptr, cfg.options, scorer.get());
  if (!cfg.out.empty()) WriteSquad(result.augmented, cfg.out);
  if (!cfg.report.empty()) WriteText(cfg.report, RenderJson(result.report) + "\n");
  if (!cfg.candidates_out.empty()) {
    WriteText(cfg.candidates_out, SerializeCandidates(result.candidates));
  }
  outcome.result = std::move(result);
  return outcome;
}

std::vector<std::filesystem::path> RunSubsample(
    const std::filesystem::path& corpus, std::span<const std::size_t> sizes,
    std::uint64_t seed, const std::filesystem::path& out_dir,
    std::optional<Provenance> only) {
  const QaDataset d = LoadSquad(corpus);
  const QaDataset base = StripGenerated(d);
  std::vector<GeneratedQuestion> pool;
  for (auto& g : ExtractGenerated(d)) {
    if (!only || g.entry.provenance == *only) pool.push_back(std::move(g));
  }
  const auto samples = Subsample(pool, sizes, seed);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + out_dir.string());
  std::vector<std::filesystem::path> written;
  for (const auto& [size, sample] : samples) {
    const auto path = out_dir / ("subsample-" + std::to_string(size) + ".json");
    WriteSquad(MergeAugmented(base, sample), path);
    written.push_back(path);
  }
  return written;
}

GenerationReport RunReport(const std::filesystem::path& corpus) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(corpus, ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot open " + corpus.string());
  if (size == 0) return {};
  return ReportCounts(LoadSquad(corpus));
}

}  // namespace swapgen
