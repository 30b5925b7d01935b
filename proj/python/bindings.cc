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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "swapgen/annotation.h"
#include "swapgen/corpus_io.h"
#include "swapgen/errors.h"
#include "swapgen/hashing.h"
#include "swapgen/pipeline.h"
#include "swapgen/report.h"
#include "swapgen/scoring.h"
#include "swapgen/wordnet.h"

namespace py = pybind11;
namespace fs = std::filesystem;

namespace swapgen {
namespace {

py::dict ToDict(const GenerationReport& r) {
  return py::module_::import("json").attr("loads")(RenderJson(r));
}

using OptPath = std::optional<fs::path>;

fs::path Or(const OptPath& p) { return p.value_or(fs::path()); }

std::vector<py::dict> Violations(const fs::path& corpus, const OptPath& sidecar) {
  const QaDataset d = LoadSquad(corpus);
  std::vector<py::dict> out;
  if (!sidecar) return out;
  for (const auto& v : ValidateAgainst(LoadSidecar(*sidecar), d)) {
    py::dict row;
    row["kind"] = std::string(ViolationKindName(v.kind));
    row["id"] = v.id;
    row["detail"] = v.detail;
    out.push_back(std::move(row));
  }
  return out;
}

py::dict RunAugmentPy(const fs::path& corpus, const fs::path& sidecar,
                      const OptPath& out, const std::string& strategy,
                      const std::optional<std::string>& filter, std::uint64_t seed,
                      const OptPath& wordnet_dir, const std::string& scorer,
                      const std::string& antonym_scope, int ngram_order,
                      double ngram_k, const OptPath& report,
                      const OptPath& candidates_out) {
  RunConfig cfg;
  cfg.corpus = corpus;
  cfg.sidecar = sidecar;
  cfg.out = Or(out);
  cfg.wordnet_dir = Or(wordnet_dir);
  cfg.scorer = scorer;
  cfg.report = Or(report);
  cfg.candidates_out = Or(candidates_out);
  cfg.options.strategy = ParseRunStrategy(strategy);
  if (filter) cfg.options.filter = ParseFilter(*filter);
  cfg.options.seed = seed;
  cfg.options.antonym_scope = ParseAntonymScope(antonym_scope);
  cfg.options.ngram_order = ngram_order;
  cfg.options.ngram_k = ngram_k;
  RunOutcome outcome;
  {
    py::gil_scoped_release release;
    outcome = RunAugment(cfg);
  }
  if (!outcome.violations.empty()) {
    throw Error(ErrorCode::kSchemaViolation,
                std::to_string(outcome.violations.size()) +
                    " annotation violations; run validate for details");
  }
  return ToDict(outcome.result->report);
}

}  // namespace
}  // namespace swapgen

PYBIND11_MODULE(_swapgen, m) {
  using namespace swapgen;
  m.doc() = "Unanswerable question generation for SQuAD 2.0 style corpora";

  static py::exception<Error> error(m, "SwapgenError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(std::string(ErrorCodeName(e.code())) + ": " + e.detail());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("context_id", &ContextId, py::arg("context"));
  m.def("derive_seed", &DeriveSeed, py::arg("seed"), py::arg("key"));
  m.def("provenance", [](const std::string& id) {
    return std::string(ProvenanceName(ProvenanceFromId(id)));
  }, py::arg("question_id"));

  m.def("validate", &Violations, py::arg("corpus"), py::arg("sidecar") = py::none(),
        "Loads a corpus and returns sidecar coverage violations as dicts.");
  m.def("augment", &RunAugmentPy, py::arg("corpus"), py::arg("sidecar"),
        py::arg("out") = py::none(), py::arg("strategy") = "antonym",
        py::arg("filter") = py::none(), py::arg("seed") = 0,
        py::arg("wordnet_dir") = py::none(), py::arg("scorer") = "ngram",
        py::arg("antonym_scope") = "synset", py::arg("ngram_order") = 3,
        py::arg("ngram_k") = 0.1, py::arg("report") = py::none(),
        py::arg("candidates_out") = py::none(),
        "Runs an augmentation and returns the counts report.");
  m.def("subsample", [](const fs::path& corpus, const std::vector<std::size_t>& sizes,
                        std::uint64_t seed, const fs::path& out_dir,
                        const std::optional<std::string>& only) {
    std::optional<Provenance> p;
    if (only && *only != "antonym" && *only != "entity") {
      throw Error(ErrorCode::kConfigError, "only must be antonym or entity");
    }
    if (only) p = *only == "antonym" ? Provenance::kAntonymAug : Provenance::kEntityAug;
    return RunSubsample(corpus, sizes, seed, out_dir, p);
  }, py::arg("corpus"), py::arg("sizes"), py::arg("seed"), py::arg("out_dir"),
     py::arg("only") = py::none());
  m.def("report", [](const fs::path& corpus) { return ToDict(RunReport(corpus)); },
        py::arg("corpus"));
  m.def("convert_tydiqa", [](const fs::path& in, const fs::path& out,
                             const std::string& language) {
    const QaDataset d = ConvertTydiQaMinSpan(in, language);
    WriteSquad(d, out);
    return ToDict(ReportCounts(d));
  }, py::arg("jsonl"), py::arg("out"), py::arg("language") = "english");

  py::enum_<AntonymScope>(m, "AntonymScope")
      .value("LEMMA", AntonymScope::kLemma)
      .value("SYNSET", AntonymScope::kSynset);

  py::class_<WordNetDb>(m, "WordNet")
      .def_static("load", &WordNetDb::Load, py::arg("dict_dir"))
      .def("antonyms", &WordNetDb::Antonyms, py::arg("lemma"), py::arg("upos"),
           py::arg("scope") = AntonymScope::kSynset)
      .def_property_readonly("num_synsets", &WordNetDb::NumSynsets);

  py::class_<NgramModel>(m, "NgramModel")
      .def_static("train", [](const std::vector<std::string>& corpus, int order, double k) {
        return NgramModel::Train(corpus, order, k);
      }, py::arg("corpus"), py::arg("order") = 3, py::arg("k") = 0.1)
      .def_static("tokenize", &NgramModel::Tokenize, py::arg("text"))
      .def("probability", [](const NgramModel& mdl, const std::vector<std::string>& h,
                             const std::string& w) { return mdl.Probability(h, w); },
           py::arg("history"), py::arg("word"))
      .def("perplexity", &NgramModel::Perplexity, py::arg("text"))
      .def_property_readonly("vocabulary_size", &NgramModel::VocabularySize);
}
