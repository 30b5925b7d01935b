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

#include "swapgen/report.h"

#include <sstream>

#include "json.hpp"

namespace swapgen {
namespace {

std::string Grouped(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && i >= lead && (i - lead) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

std::string Pad(std::string_view s, std::size_t width, bool right) {
  if (s.size() >= width) return std::string(s);
  std::string fill(width - s.size(), ' ');
  return right ? fill + std::string(s) : std::string(s) + fill;
}

void Row(std::ostringstream& out, std::string_view label, std::string_view a,
         std::string_view b) {
  out << Pad(label, 28, false) << Pad(a, 12, true) << Pad(b, 14, true) << '\n';
}

nlohmann::ordered_json StatsJson(const StrategyStats& s) {
  nlohmann::ordered_json j;
  j["seeds_processed"] = s.seeds_processed;
  j["candidates_generated"] = s.candidates_generated;
  j["candidates_survived"] = s.candidates_survived;
  j["exclusions"] = {{"aux_initial", s.aux_initial},
                     {"wh_adjacent_adjective", s.wh_adjacent_adjective},
                     {"no_eligible_target", s.no_eligible_target},
                     {"empty_replacement_pool", s.empty_replacement_pool}};
  return j;
}

void StatsRows(std::ostringstream& out, std::string_view name,
               const StrategyStats& s) {
  out << name << '\n';
  Row(out, "  seeds processed", Grouped(s.seeds_processed), "");
  Row(out, "  candidates generated", Grouped(s.candidates_generated), "");
  Row(out, "  candidates kept", Grouped(s.candidates_survived), "");
  Row(out, "  excluded: AUX-initial", Grouped(s.aux_initial), "");
  Row(out, "  excluded: wh-adjacent ADJ", Grouped(s.wh_adjacent_adjective), "");
  Row(out, "  no eligible target", Grouped(s.no_eligible_target), "");
  Row(out, "  empty replacement pool", Grouped(s.empty_replacement_pool), "");
}

}  // namespace

GenerationReport ReportCounts(const QaDataset& d) {
  GenerationReport r;
  for (const auto& article : d.articles) {
    for (const auto& para : article.paragraphs) {
      for (const auto& e : para.qas) {
        if (!e.is_impossible) {
          ++r.answerable;
          continue;
        }
        ++r.unanswerable;
        switch (e.provenance) {
          case Provenance::kOriginal:
            ++r.original_unanswerable;
            break;
          case Provenance::kAntonymAug:
            ++r.antonym_generated;
            break;
          case Provenance::kEntityAug:
            ++r.entity_generated;
            break;
        }
      }
    }
  }
  return r;
}

void AddCounts(GenerationReport& into, const GenerationReport& other) {
  into.answerable += other.answerable;
  into.unanswerable += other.unanswerable;
  into.original_unanswerable += other.original_unanswerable;
  into.antonym_generated += other.antonym_generated;
  into.entity_generated += other.entity_generated;
}

std::string RenderTable(const GenerationReport& r, std::string_view label) {
  std::ostringstream out;
  Row(out, "Data", "Answerable", "Unanswerable");
  Row(out, label, Grouped(r.answerable), Grouped(r.original_unanswerable));
  if (r.antonym_generated > 0 || r.antonym) {
    Row(out, "  + Antonym", "+ 0", "+ " + Grouped(r.antonym_generated));
  }
  if (r.entity_generated > 0 || r.entity) {
    Row(out, "  + Entity", "+ 0", "+ " + Grouped(r.entity_generated));
  }
  Row(out, "Total", Grouped(r.answerable), Grouped(r.unanswerable));
  if (r.antonym) StatsRows(out, "Antonym generation", *r.antonym);
  if (r.entity) StatsRows(out, "Entity generation", *r.entity);
  return out.str();
}

std::string RenderJson(const GenerationReport& r) {
  nlohmann::ordered_json j;
  j["answerable"] = r.answerable;
  j["unanswerable"] = r.unanswerable;
  j["unanswerable_by_provenance"] = {{"original", r.original_unanswerable},
                                     {"antonym", r.antonym_generated},
                                     {"entity", r.entity_generated}};
  if (r.antonym) j["antonym"] = StatsJson(*r.antonym);
  if (r.entity) j["entity"] = StatsJson(*r.entity);
  return j.dump(2);
}

}  // namespace swapgen
