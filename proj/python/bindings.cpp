// Copyright 2026 The nbdup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>

#include "nbdup/dup_scoring.hpp"
#include "nbdup/edit_distance.hpp"
#include "nbdup/error.hpp"
#include "nbdup/normalize.hpp"
#include "nbdup/notebook_ingest.hpp"
#include "nbdup/report_io.hpp"
#include "nbdup/scan_pipeline.hpp"

namespace py = pybind11;

namespace {

nbdup::AnalysisConfig make_config(double threshold, double lambda1, double lambda2,
                                  double log_base, double max_dr, std::size_t min_cells,
                                  bool pruning) {
  nbdup::AnalysisConfig cfg;
  cfg.scoring.dr_threshold = threshold;
  cfg.scoring.lambda1 = lambda1;
  cfg.scoring.lambda2 = lambda2;
  cfg.scoring.log_base = log_base;
  cfg.scoring.diagnostic_max_dr = max_dr;
  cfg.min_cells = min_cells;
  cfg.pruning = pruning;
  cfg.validate();
  return cfg;
}

nbdup::NormalizedCell cell_from_text(const std::string& text, std::size_t index) {
  nbdup::CodeCell code{nbdup::CellRef{"py", "<text>", index}, text, std::string("python")};
  auto nc = nbdup::normalize_cell(code, nbdup::CommentRules::defaults());
  if (!nc) throw py::value_error("cell has no code after normalization");
  return *nc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Duplicate-cell detection for notebook repositories";

  py::register_exception<nbdup::Error>(m, "NbdupError");

  m.def("levenshtein",
        py::overload_cast<std::string_view, std::string_view>(&nbdup::levenshtein),
        py::arg("a"), py::arg("b"), "Levenshtein distance over Unicode characters.");
  m.def(
      "levenshtein_bounded",
      [](std::string_view a, std::string_view b, std::size_t bound) -> py::object {
        const auto r = nbdup::levenshtein_bounded(a, b, bound);
        if (r.exceeds_bound()) return py::none();
        return py::int_(r.value());
      },
      py::arg("a"), py::arg("b"), py::arg("bound"),
      "Distance if it is at most `bound`, otherwise None.");

  m.def(
      "normalize",
      [](const std::string& source, const std::string& language) -> py::object {
        nbdup::CodeCell code{nbdup::CellRef{"py", "<text>", 0}, source, language};
        auto nc = nbdup::normalize_cell(code, nbdup::CommentRules::defaults());
        if (!nc) return py::none();
        return py::make_tuple(nc->text, nc->char_count, nc->loc);
      },
      py::arg("source"), py::arg("language") = "python",
      "Returns (text, char_count, loc), or None when nothing survives.");
  m.def(
      "abstract_identifiers",
      [](std::string_view text, const std::string& language) {
        return nbdup::abstract_identifiers(text,
                                           nbdup::KeywordTable::defaults().for_language(language));
      },
      py::arg("text"), py::arg("language") = "python");

  m.def(
      "denominator",
      [](std::size_t chars1, std::size_t chars2, std::size_t loc1, std::size_t loc2,
         double lambda1, double lambda2, double log_base) {
        nbdup::ScoringConfig sc;
        sc.lambda1 = lambda1;
        sc.lambda2 = lambda2;
        sc.log_base = log_base;
        return nbdup::denominator_terms(chars1, chars2, loc1, loc2, sc).total();
      },
      py::arg("chars1"), py::arg("chars2"), py::arg("loc1"), py::arg("loc2"),
      py::arg("lambda1") = 6.0, py::arg("lambda2") = 8.0, py::arg("log_base") = 10.0);
  m.def(
      "duplicate_ratio",
      [](const std::string& a, const std::string& b) {
        return nbdup::duplicate_ratio(cell_from_text(a, 0), cell_from_text(b, 1),
                                      nbdup::ScoringConfig{});
      },
      py::arg("a"), py::arg("b"), "DR of two python cells under the default weights.");

  m.def(
      "parse_notebook",
      [](const std::string& text) {
        auto nb = nbdup::parse_notebook_text(text, "py", "<memory>");
        std::vector<std::string> sources;
        for (auto& c : nb.cells) sources.push_back(std::move(c.source));
        return py::make_tuple(sources, nb.language);
      },
      py::arg("text"), "Returns ([code cell sources], language).");

  m.def(
      "scan_repository",
      [](const std::filesystem::path& root, double threshold, double lambda1, double lambda2,
         double log_base, double max_dr, std::size_t min_cells, bool pruning, std::size_t jobs) {
        nbdup::ScanConfig cfg{
            make_config(threshold, lambda1, lambda2, log_base, max_dr, min_cells, pruning), jobs};
        nbdup::RepositoryReport report;
        {
          py::gil_scoped_release release;
          report = nbdup::scan_repository(root, cfg);
        }
        return nbdup::to_json(report);
      },
      py::arg("root"), py::arg("threshold") = 0.3, py::arg("lambda1") = 6.0,
      py::arg("lambda2") = 8.0, py::arg("log_base") = 10.0, py::arg("max_dr") = 1.0,
      py::arg("min_cells") = nbdup::kDefaultMinCells, py::arg("pruning") = true,
      py::arg("jobs") = 1, "Scans a repository and returns the JSON report text.");
}
