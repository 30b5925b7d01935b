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

#include "acceptance/synthetic_corpus.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "swapgen/text.h"
#include "unit/test_util.h"

namespace swapgen::testing {
namespace {

const std::map<std::string, std::vector<std::string>> kNames = {
    {"PER",
     {"Alice Moreau", "Bruno Kessler", "Chiara Lenz", "Dmitri Orlov", "Elena Ruiz",
      "Farid Haddad", "Grete Olsen", "Hiro Tanaka", "Inês Duarte", "Jonas Weber",
      "Kofi Mensah", "Lena Björk", "Mateo Silva", "Nadia Karim", "Oskar Lind",
      "Priya Nair"}},
    {"LOC",
     {"Lisbon", "Kraków", "Nairobi", "Osaka", "Quito", "Tromsø", "Valparaíso",
      "Zürich", "Hamburg", "Cairo", "Perth", "Bergen"}},
    {"ORG",
     {"Northwind Trading", "Helix Labs", "Blue Harbor Press", "Atlas Rail",
      "Cedar Institute", "Orion Mining"}},
    {"DATE", {"1957", "1996", "1871", "2004", "1923", "1989"}},
};

const std::vector<std::string> kWh = {"What", "When", "Where", "Why", "Who", "Which"};

struct Lexicon {
  std::vector<std::string> nouns, verbs, adjs;
};

bool Plain(std::string_view w) {
  return w.size() >= 3 && w.size() <= 12 &&
         std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

// Half of each list has antonyms in WordNet, half has none.
Lexicon BuildLexicon(const WordNetDb& db) {
  std::map<WnFile, std::set<std::string>> with, without;
  db.ForEachSynset([&](WnFile f, const WnSynset& s) {
    if (f == WnFile::kAdv) return;
    std::set<std::size_t> sources;
    for (const auto& p : s.pointers) {
      if (p.symbol == "!" && p.source_word > 0) sources.insert(p.source_word - 1);
    }
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      if (!Plain(s.words[i])) continue;
      (sources.contains(i) ? with : without)[f].insert(s.words[i]);
    }
  });
  const auto pick = [&](WnFile f) {
    std::vector<std::string> a(with[f].begin(), with[f].end());
    std::vector<std::string> b;
    for (const auto& w : without[f]) {
      if (!with[f].contains(w)) b.push_back(w);
    }
    // Thin the much larger antonym-free list to the same size.
    std::vector<std::string> out = a;
    const std::size_t step = std::max<std::size_t>(1, b.size() / std::max<std::size_t>(1, a.size()));
    for (std::size_t i = 0; i < b.size(); i += step) out.push_back(b[i]);
    return out;
  };
  return {pick(WnFile::kNoun), pick(WnFile::kVerb), pick(WnFile::kAdj)};
}

struct Mention {
  std::string label;
  std::string surface;
};

class Builder {
 public:
  Builder(const WordNetDb& db, std::uint64_t seed) : lex_(BuildLexicon(db)), rng_(seed) {}

  AnnotatedCorpus Build(std::size_t paragraphs) {
    AnnotatedCorpus out;
    out.corpus.version = "synthetic";
    for (std::size_t p = 0; p < paragraphs; ++p) {
      if (p % 5 == 0) {
        out.corpus.articles.push_back({"Synthetic " + std::to_string(p / 5), {}});
      }
      Paragraph para = Context(out.store);
      for (int q = 0; q < 4; ++q) {
        para.qas.push_back(Question(
            "syn-" + std::to_string(p) + "-" + std::to_string(q), para, out.store));
      }
      out.corpus.articles.back().paragraphs.push_back(std::move(para));
    }
    return out;
  }

 private:
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng_)];
  }
  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Paragraph Context(AnnotationStore& store) {
    static const std::vector<std::string> kLabels = {"PER", "PER", "LOC", "LOC", "ORG",
                                                     "DATE"};
    const int n = 3 + static_cast<int>(rng_() % 5);
    std::string context;
    mentions_.clear();
    for (int i = 0; i < n; ++i) {
      const std::string label = Pick(kLabels);
      const std::string surface = Pick(kNames.at(label));
      mentions_.push_back({label, surface});
      if (!context.empty()) context += " ";
      context += "The " + Pick(lex_.nouns) + " of " + surface + " was " +
                 Pick(lex_.adjs) + ".";
    }
    Paragraph para{context, ContextId(context), {}};
    AnnotatedContext ann{para.context_id, {}};
    std::map<std::string, std::size_t> seen;
    for (const auto& m : mentions_) {
      ann.entities.push_back(
          MakeContextEntity(context, " " + m.surface + " ", m.label, seen[m.surface]++));
      // MakeContextEntity matched the surrounding spaces; trim them.
      auto& e = ann.entities.back();
      ++e.start;
      --e.end;
      e.surface = m.surface;
    }
    if (!store.FindContext(ann.context_id)) store.AddContext(std::move(ann));
    return para;
  }

  // A mention that co-refers with the context two times out of three.
  Mention QuestionMention(const std::string& label) {
    std::vector<Mention> same;
    for (const auto& m : mentions_) {
      if (m.label == label) same.push_back(m);
    }
    if (!same.empty() && Chance(0.67)) return Pick(same);
    return {label, Pick(kNames.at(label))};
  }

  QuestionEntry Question(const std::string& id, const Paragraph& para,
                         AnnotationStore& store) {
    std::vector<TokenSpec> toks;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> ents;
    const auto add = [&](std::string text, std::string lemma, std::string upos) {
      toks.push_back({std::move(text), std::move(lemma), std::move(upos), 0, "dep"});
      return toks.size() - 1;
    };
    const auto add_mention = [&](const Mention& m) {
      const std::size_t first = toks.size();
      std::size_t at = 0;
      while (at <= m.surface.size()) {
        const auto sp = std::min(m.surface.find(' ', at), m.surface.size());
        const std::string w = m.surface.substr(at, sp - at);
        add(w, w, m.label == "DATE" ? "NUM" : "PROPN");
        at = sp + 1;
      }
      ents.emplace_back(first, toks.size(), m.label);
      for (std::size_t i = first; i + 1 < toks.size(); ++i) toks[i].head = toks.size() - 1;
      return toks.size() - 1;
    };

    const bool aux_initial = Chance(0.2);
    const bool how_adj = !aux_initial && Chance(0.2);
    std::size_t wh = 0, how_adj_tok = 0;
    if (aux_initial) {
      add("Did", "do", "AUX");
    } else if (how_adj) {
      wh = add("How", "how", "ADV");
      how_adj_tok = add(Pick(lex_.adjs), "", "ADJ");
      toks[how_adj_tok].lemma = toks[how_adj_tok].text;
      add("did", "do", "AUX");
    } else {
      const std::string w = Pick(kWh);
      wh = add(w, text::ToLower(w), w == "Which" ? "DET" : (w == "Who" || w == "What") ? "PRON" : "ADV");
      add("did", "do", "AUX");
    }
    const std::size_t subj = add_mention(QuestionMention(Chance(0.8) ? "PER" : "ORG"));
    const std::string verb = Pick(lex_.verbs);
    const std::size_t root = add(verb, verb, "VERB");
    const std::size_t det = add("the", "the", "DET");
    std::size_t adj = 0;
    const bool has_adj = Chance(0.7);
    if (has_adj) {
      const std::string a = Pick(lex_.adjs);
      adj = add(a, a, "ADJ");
    }
    const std::string n = Pick(lex_.nouns);
    const bool plural = Chance(0.3);
    const std::size_t noun = add(plural ? n + "s" : n, n, "NOUN");
    std::size_t prep = 0, obl = 0;
    const bool has_loc = Chance(0.6);
    if (has_loc) {
      prep = add("in", "in", "ADP");
      obl = add_mention(QuestionMention(Chance(0.8) ? "LOC" : "DATE"));
    }
    const std::size_t punct = add("?", "?", "PUNCT");

    toks[0].head = root;
    if (how_adj) {
      toks[wh].head = how_adj_tok;
      toks[how_adj_tok].head = root;
    } else if (!aux_initial) {
      toks[wh].head = root;
    }
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].text == "did" || toks[i].text == "Did") toks[i].head = root;
    }
    toks[subj].head = root;
    toks[root].head = root;
    toks[det].head = noun;
    if (has_adj) {
      // Sometimes the question word modifies the adjective directly.
      toks[adj].head = noun;
      if (!aux_initial && !how_adj && toks[wh].lemma == "which" && Chance(0.5)) {
        toks[wh].head = adj;
      }
    }
    toks[noun].head = root;
    if (has_loc) {
      toks[prep].head = root;
      toks[obl].head = prep;
    }
    toks[punct].head = root;

    std::string question;
    for (const auto& t : toks) {
      if (!question.empty() && t.text != "?") question += " ";
      question += t.text;
    }
    QuestionEntry e;
    e.id = id;
    e.question = question;
    if (Chance(0.1)) {
      e.is_impossible = true;
      return e;
    }
    const auto& first = mentions_.front();
    const auto at = para.context.find(" " + first.surface + " ");
    e.answers.push_back(
        {first.surface,
         static_cast<std::int64_t>(text::CodepointLength(para.context.substr(0, at + 1)))});
    store.AddQuestion(MakeQuestion(id, question, toks, ents));
    return e;
  }

  Lexicon lex_;
  std::mt19937_64 rng_;
  std::vector<Mention> mentions_;
};

}  // namespace

AnnotatedCorpus BuildSyntheticCorpus(const WordNetDb& db, std::size_t paragraphs,
                                     std::uint64_t seed) {
  return Builder(db, seed).Build(paragraphs);
}

}  // namespace swapgen::testing
