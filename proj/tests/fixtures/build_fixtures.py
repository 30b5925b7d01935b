#!/usr/bin/env python3
# Copyright 2026 The swapgen Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes worked_examples.json and worked_examples.ann.jsonl.

The annotations are written by hand in the shape a tagger, parser and NER
model would produce (UD tags, spaCy-style dependency labels, CoNLL entity
labels), so the fixtures do not depend on any model.

    python3 tests/fixtures/build_fixtures.py tests/fixtures
"""

import hashlib
import json
import os
import sys
import unicodedata


def nfc(s):
    return unicodedata.normalize("NFC", s)


def tok(text, lemma, upos, head, deprel):
    return {"text": nfc(text), "lemma": nfc(lemma), "upos": upos,
            "head": head, "deprel": deprel}


def place_tokens(question, tokens):
    pos = 0
    for t in tokens:
        start = question.index(t["text"], pos)
        t["start"], t["end"] = start, start + len(t["text"])
        pos = t["end"]
    return [{k: t[k] for k in ("text", "lemma", "upos", "start", "end",
                               "head", "deprel")} for t in tokens]


def context_entities(context, mentions):
    out = []
    for surface, label, nth in mentions:
        surface = nfc(surface)
        start = -1
        for _ in range(nth + 1):
            start = context.index(surface, start + 1)
        out.append({"start": start, "end": start + len(surface),
                    "label": label, "surface": surface})
    return out


BERMUDA = ("The only indigenous mammals of Bermuda are five species of bats, "
           "all of which are also found in the eastern United States.")

BEYONCE = ("Beyoncé Giselle Knowles was raised in Houston, Texas. She rose to "
           "fame in the late 1990s as lead singer of Destiny's Child. At age "
           "eight, Beyoncé and childhood friend Kelly Rowland met LaTavia "
           "Roberson while in an audition for an all-girl entertainment group.")

OSTRICH = ("Ostrich eggs are the largest of all eggs, about 15 centimetres "
           "long and weighing up to 1.4 kilograms.")

BOTANY = ("Botany is a broad science that covers plant structure, growth, "
          "reproduction, metabolism and ecology.")

ADOLESCENCE = ("During adolescence, communication with peers increases "
               "while time spent with parents decreases.")

GERMANY = ("In 1952, following a referendum, Baden, Württemberg-Baden, and "
           "Württemberg-Hohenzollern merged into Baden-Württemberg. In 1957, "
           "the Saar Protectorate rejoined the Federal Republic as the "
           "Saarland. German reunification in 1990, in which the German "
           "Democratic Republic (East Germany) ascended into the Federal "
           "Republic, resulted in the addition of the re-established eastern "
           "states of Brandenburg, Mecklenburg-West Pomerania (in German "
           "Mecklenburg-Vorpommern), Saxony (Sachsen), Saxony-Anhalt "
           "(Sachsen-Anhalt), and Thuringia (Thüringen), as well as the "
           "reunification of West and East Berlin into Berlin and its "
           "establishment as a full and equal state. A regional referendum "
           "in 1996 to merge Berlin with surrounding Brandenburg as "
           "\"Berlin-Brandenburg\" failed to reach the necessary majority vote "
           "in Brandenburg, while a majority of Berliners voted in favour of "
           "the merger.")

MIGRANTS = ("Long distance migrants are believed to disperse as young birds "
            "and form attachments to potential breeding sites and to "
            "favourite wintering sites. Once the site attachment is made they "
            "show high site-fidelity, visiting the same wintering sites year "
            "after year.")

# (title, context, context entities, questions)
# question: (id, text, answer or None, tokens, entity spans)
ARTICLES = [
    ("Bermuda", BERMUDA,
     [("Bermuda", "LOC", 0), ("United States", "LOC", 0)],
     [("bermuda-native-mammals",
       "What are the only native mammals found in Bermuda?",
       "five species of bats",
       [tok("What", "what", "PRON", 1, "attr"),
        tok("are", "be", "AUX", 1, "ROOT"),
        tok("the", "the", "DET", 5, "det"),
        tok("only", "only", "ADJ", 5, "amod"),
        tok("native", "native", "ADJ", 5, "amod"),
        tok("mammals", "mammal", "NOUN", 1, "nsubj"),
        tok("found", "find", "VERB", 5, "acl"),
        tok("in", "in", "ADP", 6, "prep"),
        tok("Bermuda", "Bermuda", "PROPN", 7, "pobj"),
        tok("?", "?", "PUNCT", 1, "punct")],
       [(8, 9, "LOC")]),
      ("bermuda-native-reptiles",
       "What are the only native reptiles found in Bermuda?", None, None,
       None)]),
    ("Beyoncé", BEYONCE,
     [("Beyoncé Giselle Knowles", "PER", 0), ("Houston", "LOC", 0),
      ("Texas", "LOC", 0), ("the late 1990s", "DATE", 0),
      ("Destiny's Child", "ORG", 0), ("Beyoncé", "PER", 1),
      ("Kelly Rowland", "PER", 0), ("LaTavia Roberson", "PER", 0)],
     [("beyonce-start-popular",
       "When did Beyonce start becoming popular?",
       "in the late 1990s",
       [tok("When", "when", "ADV", 3, "advmod"),
        tok("did", "do", "AUX", 3, "aux"),
        tok("Beyonce", "Beyonce", "PROPN", 3, "nsubj"),
        tok("start", "start", "VERB", 3, "ROOT"),
        tok("becoming", "become", "VERB", 3, "xcomp"),
        tok("popular", "popular", "ADJ", 4, "acomp"),
        tok("?", "?", "PUNCT", 3, "punct")],
       [(2, 3, "PER")]),
      ("beyonce-met-latavia",
       "How old was Beyoncé when she met LaTavia Roberson?",
       "eight",
       [tok("How", "how", "ADV", 1, "advmod"),
        tok("old", "old", "ADJ", 2, "acomp"),
        tok("was", "be", "AUX", 2, "ROOT"),
        tok("Beyoncé", "Beyoncé", "PROPN", 2, "nsubj"),
        tok("when", "when", "ADV", 6, "advmod"),
        tok("she", "she", "PRON", 6, "nsubj"),
        tok("met", "meet", "VERB", 2, "advcl"),
        tok("LaTavia", "LaTavia", "PROPN", 8, "compound"),
        tok("Roberson", "Roberson", "PROPN", 6, "dobj"),
        tok("?", "?", "PUNCT", 2, "punct")],
       [(3, 4, "PER"), (7, 9, "PER")])]),
    ("Ostrich", OSTRICH, [],
     [("ostrich-big-eggs", "How big are ostrich eggs?",
       "about 15 centimetres long",
       [tok("How", "how", "ADV", 1, "advmod"),
        tok("big", "big", "ADJ", 2, "acomp"),
        tok("are", "be", "AUX", 2, "ROOT"),
        tok("ostrich", "ostrich", "NOUN", 4, "compound"),
        tok("eggs", "egg", "NOUN", 2, "nsubj"),
        tok("?", "?", "PUNCT", 2, "punct")],
       [])]),
    ("Botany", BOTANY, [],
     [("botany-narrow-science", "Is botany a narrow science?",
       "Botany is a broad science",
       [tok("Is", "be", "AUX", 0, "ROOT"),
        tok("botany", "botany", "NOUN", 0, "nsubj"),
        tok("a", "a", "DET", 4, "det"),
        tok("narrow", "narrow", "ADJ", 4, "amod"),
        tok("science", "science", "NOUN", 0, "attr"),
        tok("?", "?", "PUNCT", 0, "punct")],
       [])]),
    ("Adolescence", ADOLESCENCE, [],
     [("adolescence-peers",
       "Does communication with peers increase or decrease during adolescence?",
       "increases",
       [tok("Does", "do", "AUX", 4, "aux"),
        tok("communication", "communication", "NOUN", 4, "nsubj"),
        tok("with", "with", "ADP", 1, "prep"),
        tok("peers", "peer", "NOUN", 2, "pobj"),
        tok("increase", "increase", "VERB", 4, "ROOT"),
        tok("or", "or", "CCONJ", 4, "cc"),
        tok("decrease", "decrease", "VERB", 4, "conj"),
        tok("during", "during", "ADP", 4, "prep"),
        tok("adolescence", "adolescence", "NOUN", 7, "pobj"),
        tok("?", "?", "PUNCT", 4, "punct")],
       [])]),
    ("States of Germany", GERMANY,
     [("1952", "DATE", 0), ("Baden", "LOC", 0), ("Württemberg-Baden", "LOC", 0),
      ("Hohenzollern", "LOC", 0), ("Baden-Württemberg", "LOC", 0),
      ("1957", "DATE", 0), ("Saar Protectorate", "LOC", 0),
      ("Federal Republic", "LOC", 0), ("Saarland", "LOC", 0),
      ("German", "MISC", 0), ("1990", "DATE", 0),
      ("German Democratic Republic", "LOC", 0), ("East Germany", "LOC", 0),
      ("Federal Republic", "LOC", 1), ("Brandenburg", "LOC", 0),
      ("Mecklenburg", "LOC", 0), ("West Pomerania", "LOC", 0),
      ("German", "MISC", 2), ("Mecklenburg-Vorpommern", "LOC", 0),
      ("Saxony", "LOC", 0), ("Sachsen", "LOC", 0), ("Saxony-Anhalt", "LOC", 0),
      ("Sachsen-Anhalt", "LOC", 0), ("Thuringia", "LOC", 0),
      ("Thüringen", "LOC", 0), ("Berlin", "LOC", 1), ("1996", "DATE", 0),
      ("Berlin", "LOC", 2), ("Brandenburg", "LOC", 1),
      ("Berlin-Brandenburg", "LOC", 0), ("Brandenburg", "LOC", 3),
      ("Berliners", "MISC", 0)],
     [("germany-berlin-referendum",
       "Why did a regional referendum in 1996 to merge Berlin with "
       "surrounding Brandenburg fail?",
       "failed to reach the necessary majority vote",
       [tok("Why", "why", "ADV", 13, "advmod"),
        tok("did", "do", "AUX", 13, "aux"),
        tok("a", "a", "DET", 4, "det"),
        tok("regional", "regional", "ADJ", 4, "amod"),
        tok("referendum", "referendum", "NOUN", 13, "nsubj"),
        tok("in", "in", "ADP", 4, "prep"),
        tok("1996", "1996", "NUM", 5, "pobj"),
        tok("to", "to", "PART", 8, "aux"),
        tok("merge", "merge", "VERB", 4, "acl"),
        tok("Berlin", "Berlin", "PROPN", 8, "dobj"),
        tok("with", "with", "ADP", 8, "prep"),
        tok("surrounding", "surround", "VERB", 12, "amod"),
        tok("Brandenburg", "Brandenburg", "PROPN", 10, "pobj"),
        tok("fail", "fail", "VERB", 13, "ROOT"),
        tok("?", "?", "PUNCT", 13, "punct")],
       [(6, 7, "DATE"), (9, 10, "LOC"), (12, 13, "LOC")]),
      ("germany-saar-rejoined",
       "In 1957, the Saar Protectorate rejoined the Federal Republic as "
       "which city?",
       "the Saarland",
       [tok("In", "in", "ADP", 6, "prep"),
        tok("1957", "1957", "NUM", 0, "pobj"),
        tok(",", ",", "PUNCT", 6, "punct"),
        tok("the", "the", "DET", 5, "det"),
        tok("Saar", "Saar", "PROPN", 5, "compound"),
        tok("Protectorate", "Protectorate", "PROPN", 6, "nsubj"),
        tok("rejoined", "rejoin", "VERB", 6, "ROOT"),
        tok("the", "the", "DET", 9, "det"),
        tok("Federal", "Federal", "PROPN", 9, "compound"),
        tok("Republic", "Republic", "PROPN", 6, "dobj"),
        tok("as", "as", "ADP", 6, "prep"),
        tok("which", "which", "DET", 12, "det"),
        tok("city", "city", "NOUN", 10, "pobj"),
        tok("?", "?", "PUNCT", 6, "punct")],
       [(1, 2, "DATE"), (4, 6, "LOC"), (8, 10, "LOC")])]),
    ("Bird migration", MIGRANTS, [],
     [("migration-long-distance", "When do long distance migrants disperse?",
       "as young birds",
       [tok("When", "when", "ADV", 5, "advmod"),
        tok("do", "do", "AUX", 5, "aux"),
        tok("long", "long", "ADJ", 3, "amod"),
        tok("distance", "distance", "NOUN", 4, "compound"),
        tok("migrants", "migrant", "NOUN", 5, "nsubj"),
        tok("disperse", "disperse", "VERB", 5, "ROOT"),
        tok("?", "?", "PUNCT", 5, "punct")],
       []),
      ("migration-young-birds", "What do young birds form attachments to?",
       "potential breeding sites",
       [tok("What", "what", "PRON", 6, "pobj"),
        tok("do", "do", "AUX", 4, "aux"),
        tok("young", "young", "ADJ", 3, "amod"),
        tok("birds", "bird", "NOUN", 4, "nsubj"),
        tok("form", "form", "VERB", 4, "ROOT"),
        tok("attachments", "attachment", "NOUN", 4, "dobj"),
        tok("to", "to", "ADP", 4, "prep"),
        tok("?", "?", "PUNCT", 4, "punct")],
       [])]),
]


def build():
    data, records = [], []
    for title, context, ctx_mentions, questions in ARTICLES:
        context = nfc(context)
        qas = []
        for qid, question, answer, tokens, spans in questions:
            question = nfc(question)
            entry = {"id": qid, "question": question,
                     "is_impossible": answer is None, "answers": []}
            if answer is None:
                entry["plausible_answers"] = [
                    {"text": "bats", "answer_start": context.index("bats")}]
                qas.append(entry)
                continue
            answer = nfc(answer)
            entry["answers"] = [{"text": answer,
                                 "answer_start": context.index(answer)}]
            qas.append(entry)
            placed = place_tokens(question, tokens)
            ents = []
            for start, end, label in spans:
                s, e = placed[start]["start"], placed[end - 1]["end"]
                ents.append({"start_token": start, "end_token": end,
                             "label": label, "surface": question[s:e]})
            records.append({"kind": "question", "question_id": qid,
                            "tokens": placed, "entities": ents})
        data.append({"title": nfc(title),
                     "paragraphs": [{"context": context, "qas": qas}]})
        context_id = hashlib.sha256(context.encode("utf-8")).hexdigest()
        records.append({"kind": "context", "context_id": context_id,
                        "entities": context_entities(context, ctx_mentions)})
    return {"version": "v2.0", "data": data}, records


def main(out_dir):
    corpus, records = build()
    with open(os.path.join(out_dir, "worked_examples.json"), "w",
              encoding="utf-8") as f:
        json.dump(corpus, f, ensure_ascii=False, indent=1)
        f.write("\n")
    with open(os.path.join(out_dir, "worked_examples.ann.jsonl"), "w",
              encoding="utf-8") as f:
        f.write("# hand-written annotations; see build_fixtures.py\n")
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.dirname(__file__))
