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

#include <doctest.h>

#include <json.hpp>

#include "nbdup/error.hpp"
#include "nbdup/report_io.hpp"
#include "nbdup/scan_pipeline.hpp"
#include "test_support.hpp"

using namespace nbdup;
using nbdup::testing::fixtures_dir;

namespace {

RepositoryReport planted() {
  ScanConfig cfg;
  return scan_repository(fixtures_dir() / "repo_planted", cfg);
}

}  // namespace

TEST_CASE("repository JSON round-trips") {
  const auto r = planted();
  const std::string text = to_json(r);
  CHECK(repository_report_from_json(text) == r);
  CHECK(to_json(repository_report_from_json(text)) == text);

  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["nbdup_schema"] == 1);
  CHECK(doc["effective_config"]["lambda1"] == 6.0);
  CHECK(doc["effective_config"]["min_cells"] == 28);
  CHECK(doc["duplicate_pairs"][0]["a"]["notebook"] == "analysis.ipynb");
  CHECK(doc["dr_band_histogram"]["bands"].size() == 10);
}

TEST_CASE("round-trip keeps non-default config and odd values") {
  ScanConfig cfg;
  cfg.analysis.scoring.log_base = 2.718281828459045;
  cfg.analysis.scoring.dr_threshold = 0.1 + 0.2;
  cfg.analysis.keywords.override_set = KeywordSet{"zeta", "alpha"};
  cfg.analysis.comment_rules.markers["sql"] = "--";
  cfg.analysis.pruning = false;
  auto r = scan_repository(fixtures_dir() / "repo_mixed", cfg);
  CHECK(repository_report_from_json(to_json(r)) == r);
  CHECK(config_from_json(to_json(r)) == cfg.analysis);
  CHECK(config_from_json(config_to_json(cfg.analysis)) == cfg.analysis);
}

TEST_CASE("corpus JSON round-trips") {
  std::vector<RepositoryReport> reports = {planted()};
  RepositorySummary failed;
  failed.repo_id = "missing, \"quoted\"";
  failed.error = "cannot read";
  const std::vector<RepositorySummary> failures = {failed};
  const auto c = aggregate(reports, AnalysisConfig{}, failures);
  CHECK(corpus_report_from_json(to_json(c)) == c);
}

TEST_CASE("schema mismatches are rejected") {
  CHECK_THROWS_AS(repository_report_from_json("{}"), Error);
  CHECK_THROWS_AS(repository_report_from_json(R"({"nbdup_schema":2,"kind":"repository"})"), Error);
  CHECK_THROWS_AS(corpus_report_from_json(to_json(planted())), Error);
  CHECK_THROWS_AS(repository_report_from_json(R"({"nbdup_schema":1,"kind":"repository"})"), Error);
  CHECK_THROWS_AS(repository_report_from_json("not json"), Error);
}

TEST_CASE("CSV carries one summary row per repository") {
  const auto r = planted();
  const std::string csv = to_csv(r);
  CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(csv.find("repo_planted,3,30,5,3,1,1,4,0.13333333333333333,0.23333333333333334\n") !=
        std::string::npos);

  RepositorySummary odd;
  odd.repo_id = "a,b";
  const std::vector<RepositorySummary> rows = {odd};
  CorpusReport c;
  c.repo_reports = rows;
  CHECK(to_csv(c).find("\"a,b\",0,0") != std::string::npos);
}

TEST_CASE("text output mentions the key numbers") {
  const std::string text = to_text(planted());
  CHECK(text.find("clone classes: 3") != std::string::npos);
  CHECK(text.find("duplicated cells: 4") != std::string::npos);
}

TEST_CASE("format names") {
  CHECK(report_format_from_string("json") == ReportFormat::Json);
  CHECK(report_format_from_string("csv") == ReportFormat::Csv);
  CHECK(report_format_from_string("text") == ReportFormat::Text);
  CHECK_THROWS_AS(report_format_from_string("xml"), ConfigError);
}
