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

#include "swapgen/corpus_io.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "swapgen/errors.h"
#include "unit/test_util.h"

namespace swapgen {
namespace {

using ::swapgen::testing::FixturePath;

constexpr std::string_view kSmall = R"({
  "version": "v2.0",
  "data": [{
    "title": "Bermuda",
    "paragraphs": [{
      "context": "Bermuda's only native mammals are bats.",
      "qas": [
        {"id": "q1", "question": "What are the only native mammals?",
         "is_impossible": false,
         "answers": [{"text": "bats", "answer_start": 34}]},
        {"id": "q1-antonym-0", "question": "What are the only foreign mammals?",
         "is_impossible": true, "answers": []},
        {"id": "q2", "question": "Where is the Café?", "is_impossible": true,
         "answers": [], "plausible_answers": [{"text": "x", "answer_start": 3}]}
      ]
    }]
  }]
})";

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kConfigError;
}

GeneratedQuestion Gen(const std::string& context_id, const std::string& id) {
  GeneratedQuestion g;
  g.context_id = context_id;
  g.entry.id = id;
  g.entry.question = "generated " + id;
  g.entry.is_impossible = true;
  g.entry.provenance = ProvenanceFromId(id);
  return g;
}

TEST(CorpusIoTest, ParsesAndInfersProvenance) {
  const QaDataset d = ParseSquad(kSmall, "small");
  ASSERT_EQ(d.NumQuestions(), 3u);
  const Paragraph& p = d.articles[0].paragraphs[0];
  EXPECT_EQ(p.context_id, ContextId(p.context));
  EXPECT_EQ(p.qas[0].provenance, Provenance::kOriginal);
  EXPECT_EQ(p.qas[1].provenance, Provenance::kAntonymAug);
  EXPECT_EQ(p.qas[2].provenance, Provenance::kOriginal);
  ASSERT_TRUE(p.qas[2].plausible_answers.has_value());
}

TEST(CorpusIoTest, ProvenanceFromIdShapes) {
  EXPECT_EQ(ProvenanceFromId("abc-antonym-0"), Provenance::kAntonymAug);
  EXPECT_EQ(ProvenanceFromId("a-b-entity-12"), Provenance::kEntityAug);
  EXPECT_EQ(ProvenanceFromId("antonym-0"), Provenance::kOriginal);
  EXPECT_EQ(ProvenanceFromId("abc-antonym-"), Provenance::kOriginal);
  EXPECT_EQ(ProvenanceFromId("abc-antonym-x1"), Provenance::kOriginal);
  EXPECT_EQ(ProvenanceFromId("abcantonym-1"), Provenance::kOriginal);
  EXPECT_EQ(ProvenanceFromId("56be85543aeaaa14008c9063"), Provenance::kOriginal);
  EXPECT_EQ(GeneratedId("s", "entity", 3), "s-entity-3");
  EXPECT_EQ(ProvenanceFromId(GeneratedId("x-y", "antonym", 41)),
            Provenance::kAntonymAug);
}

TEST(CorpusIoTest, RoundTripIsExact) {
  const QaDataset d = ParseSquad(kSmall, "small");
  const std::string once = SerializeSquad(d);
  const QaDataset again = ParseSquad(once, "again");
  EXPECT_EQ(d, again);
  EXPECT_EQ(once, SerializeSquad(again));
}

TEST(CorpusIoTest, FixtureRoundTrips) {
  const QaDataset d = LoadSquad(FixturePath("worked_examples.json"));
  EXPECT_EQ(d.NumQuestions(), 11u);
  EXPECT_EQ(ParseSquad(SerializeSquad(d), "rt"), d);
}

TEST(CorpusIoTest, AnswerOffsetsCountCodepoints) {
  const std::string json = R"({"version":"v","data":[{"title":"t","paragraphs":[
    {"context":"Beyoncé sang.","qas":[{"id":"a","question":"Who?",
     "is_impossible":false,"answers":[{"text":"sang","answer_start":8}]}]}]}]})";
  EXPECT_NO_THROW(ParseSquad(json, "cp"));
  std::string bytes = json;
  bytes.replace(bytes.find("\"answer_start\":8"), 16, "\"answer_start\":9");
  EXPECT_EQ(CodeOf([&] { ParseSquad(bytes, "cp"); }), ErrorCode::kSchemaViolation);
}

TEST(CorpusIoTest, SchemaViolations) {
  const auto bad = [](std::string_view from, std::string_view to) {
    std::string s(kSmall);
    const auto at = s.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    s.replace(at, from.size(), to);
    return s;
  };
  EXPECT_EQ(CodeOf([&] { ParseSquad("{", "x"); }), ErrorCode::kMalformedFile);
  EXPECT_EQ(CodeOf([&] { ParseSquad("[]", "x"); }), ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([&] {
              ParseSquad(bad("\"is_impossible\": false", "\"is_impossible\": 0"), "x");
            }),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([&] {
              ParseSquad(bad("\"answer_start\": 34", "\"answer_start\": 33"), "x");
            }),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([&] {
              ParseSquad(bad("\"answers\": []}", "\"answers\": [{\"text\": \"bats\", "
                                                 "\"answer_start\": 34}]}"),
                         "x");
            }),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([&] {
              ParseSquad(bad("\"answer_start\": 3}", "\"answer_start\": 400}"), "x");
            }),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([&] { ParseSquad(bad("\"title\": \"Bermuda\"", "\"title\": \"\""), "x"); }),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([&] { LoadSquad("/nonexistent/corpus.json"); }),
            ErrorCode::kIoFailure);
}

TEST(CorpusIoTest, MergeAppendsToMatchingContext) {
  const QaDataset d = ParseSquad(kSmall, "small");
  const std::string cid = d.articles[0].paragraphs[0].context_id;
  const std::vector<GeneratedQuestion> gen = {Gen(cid, "q1-entity-0"),
                                              Gen(cid, "q1-antonym-1")};
  const QaDataset m = MergeAugmented(d, gen);
  EXPECT_EQ(m.NumQuestions(), d.NumQuestions() + 2);
  EXPECT_EQ(m.articles[0].paragraphs[0].qas.back().id, "q1-antonym-1");
  EXPECT_NO_THROW(ValidateDataset(m));

  EXPECT_EQ(CodeOf([&] {
              const std::vector<GeneratedQuestion> g = {Gen("nope", "q1-entity-0")};
              MergeAugmented(d, g);
            }),
            ErrorCode::kUnknownContext);
  EXPECT_EQ(CodeOf([&] {
              const std::vector<GeneratedQuestion> g = {Gen(cid, "q1-antonym-0")};
              MergeAugmented(d, g);
            }),
            ErrorCode::kDuplicateId);
  EXPECT_EQ(CodeOf([&] {
              const std::vector<GeneratedQuestion> g = {Gen(cid, "q9")};
              MergeAugmented(d, g);
            }),
            ErrorCode::kSchemaViolation);
}

TEST(CorpusIoTest, ExtractStripAndMergeConserve) {
  const QaDataset d = ParseSquad(kSmall, "small");
  const auto gen = ExtractGenerated(d);
  ASSERT_EQ(gen.size(), 1u);
  const QaDataset base = StripGenerated(d);
  EXPECT_EQ(base.NumQuestions(), 2u);
  // Generated entries move to the end of their paragraph.
  const QaDataset merged = MergeAugmented(base, gen);
  EXPECT_EQ(StripGenerated(merged), base);
  EXPECT_EQ(ExtractGenerated(merged), gen);
  EXPECT_EQ(merged.articles[0].paragraphs[0].qas.back().id, "q1-antonym-0");
}

std::vector<GeneratedQuestion> Pool(std::size_t n) {
  std::vector<GeneratedQuestion> pool;
  for (std::size_t i = 0; i < n; ++i) {
    pool.push_back(Gen("c", GeneratedId("s" + std::to_string(i), "entity", 0)));
  }
  return pool;
}

std::set<std::string> Ids(const std::vector<GeneratedQuestion>& v) {
  std::set<std::string> out;
  for (const auto& g : v) out.insert(g.entry.id);
  return out;
}

TEST(SubsampleTest, NestedDeterministicAndOrdered) {
  const auto pool = Pool(200);
  const std::vector<std::size_t> sizes = {50, 10, 120, 0, 200};
  const auto a = Subsample(pool, sizes, 5);
  const auto b = Subsample(pool, sizes, 5);
  ASSERT_EQ(a.size(), sizes.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, sizes[i]);
    EXPECT_EQ(a[i].second.size(), sizes[i]);
    EXPECT_EQ(Ids(a[i].second), Ids(b[i].second));
    EXPECT_EQ(Ids(a[i].second).size(), sizes[i]);
    // Pool order is kept.
    std::vector<std::size_t> pos;
    for (const auto& g : a[i].second) {
      pos.push_back(std::find_if(pool.begin(), pool.end(),
                                 [&](const auto& p) { return p.entry.id == g.entry.id; }) -
                    pool.begin());
    }
    EXPECT_TRUE(std::is_sorted(pos.begin(), pos.end()));
  }
  const auto s10 = Ids(a[1].second), s50 = Ids(a[0].second), s120 = Ids(a[2].second);
  EXPECT_TRUE(std::includes(s50.begin(), s50.end(), s10.begin(), s10.end()));
  EXPECT_TRUE(std::includes(s120.begin(), s120.end(), s50.begin(), s50.end()));
  EXPECT_NE(Ids(Subsample(pool, std::vector<std::size_t>{50}, 6)[0].second), s50);
}

TEST(SubsampleTest, InclusionIsUniform) {
  const auto pool = Pool(10);
  std::vector<int> hits(10, 0);
  constexpr int kTrials = 20000;
  for (int t = 0; t < kTrials; ++t) {
    const auto samples = Subsample(pool, std::vector<std::size_t>{3}, t);
    for (const auto& g : samples[0].second) {
      ++hits[std::stoi(g.entry.id.substr(1))];
    }
  }
  // Each member is included with probability 0.3.
  const double mean = kTrials * 0.3;
  const double sd = std::sqrt(kTrials * 0.3 * 0.7);
  for (int h : hits) EXPECT_LT(std::abs(h - mean), 4 * sd);
}

TEST(SubsampleTest, Errors) {
  const auto pool = Pool(5);
  EXPECT_EQ(CodeOf([&] { Subsample(pool, std::vector<std::size_t>{6}, 0); }),
            ErrorCode::kSampleTooLarge);
  EXPECT_EQ(CodeOf([&] { Subsample(pool, std::vector<std::size_t>{2, 2}, 0); }),
            ErrorCode::kConfigError);
}

}  // namespace
}  // namespace swapgen
