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

#include "nbdup/corpus_stats.hpp"

#include <algorithm>

namespace nbdup {

RepositorySummary summarize_repository(const RepositoryReport& report) {
  RepositorySummary s;
  s.repo_id = report.repo_id;
  s.notebook_count = report.notebook_count;
  s.unparseable_count = report.unparseable_count;
  s.total_code_cells = report.total_code_cells;
  s.duplicate_pair_count = report.duplicate_pairs.size();
  s.type1 = report.type_count(CloneType::Type1);
  s.type2 = report.type_count(CloneType::Type2);
  s.type3 = report.type_count(CloneType::Type3);
  s.duplicated_cell_count = report.duplicated_cell_count;
  s.duplicates_ratio = report.duplicates_ratio;
  s.members_ratio = report.members_ratio;
  return s;
}

FilterResult filter_repositories(std::span<const RepositoryReport> reports,
                                 std::size_t min_cells) {
  FilterResult out;
  for (const auto& r : reports) {
    (r.total_code_cells >= min_cells ? out.included : out.excluded).push_back(&r);
  }
  return out;
}

CorpusReport aggregate(std::span<const RepositoryReport> reports, const AnalysisConfig& config,
                       std::span<const RepositorySummary> failures) {
  CorpusReport c;
  c.effective_config = config;

  const FilterResult filtered = filter_repositories(reports, config.min_cells);
  c.included_repo_count = filtered.included.size();
  c.excluded_small_repo_count = filtered.excluded.size();
  c.failed_repo_count = failures.size();

  std::vector<double> ratios;
  std::vector<double> lds;
  for (const RepositoryReport* r : filtered.included) {
    ratios.push_back(r->duplicates_ratio);
    for (const auto& p : r->duplicate_pairs) {
      lds.push_back(static_cast<double>(p.ld));
      switch (p.clone_type) {
        case CloneType::Type1: ++c.clone_type_breakdown.type1; break;
        case CloneType::Type2: ++c.clone_type_breakdown.type2; break;
        case CloneType::Type3: ++c.clone_type_breakdown.type3; break;
      }
    }
  }
  c.ratio_stats = summarize(ratios);
  c.ld_distribution_stats = summarize(lds);

  for (const auto& r : reports) {
    RepositorySummary row = summarize_repository(r);
    row.included = r.total_code_cells >= config.min_cells;
    c.repo_reports.push_back(std::move(row));
  }
  for (const auto& f : failures) {
    RepositorySummary row = f;
    row.included = false;
    c.repo_reports.push_back(std::move(row));
  }
  std::stable_sort(c.repo_reports.begin(), c.repo_reports.end(),
                   [](const RepositorySummary& x, const RepositorySummary& y) {
                     return x.repo_id < y.repo_id;
                   });

  if (reports.empty() && failures.empty()) {
    c.warnings.push_back("corpus is empty");
  } else if (c.included_repo_count == 0) {
    c.warnings.push_back("no repository meets the minimum cell count");
  }
  return c;
}

}  // namespace nbdup
