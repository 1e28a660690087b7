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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbdup/clone_grouping.hpp"

namespace nbdup {

/// One row of the corpus table.
struct RepositorySummary {
  std::string repo_id;
  std::size_t notebook_count = 0;
  std::size_t unparseable_count = 0;
  std::size_t total_code_cells = 0;
  std::size_t duplicate_pair_count = 0;
  std::size_t type1 = 0;
  std::size_t type2 = 0;
  std::size_t type3 = 0;
  std::size_t duplicated_cell_count = 0;
  double duplicates_ratio = 0.0;
  double members_ratio = 0.0;
  bool included = false;  // meets the min-cells filter
  std::optional<std::string> error;  // set when the repository could not be scanned

  friend bool operator==(const RepositorySummary&, const RepositorySummary&) = default;
};

RepositorySummary summarize_repository(const RepositoryReport& report);

struct CloneTypeBreakdown {
  std::size_t type1 = 0;
  std::size_t type2 = 0;
  std::size_t type3 = 0;
  std::size_t total() const { return type1 + type2 + type3; }

  friend bool operator==(const CloneTypeBreakdown&, const CloneTypeBreakdown&) = default;
};

struct CorpusReport {
  std::vector<RepositorySummary> repo_reports;  // sorted by repo_id
  std::size_t included_repo_count = 0;
  std::size_t excluded_small_repo_count = 0;
  std::size_t failed_repo_count = 0;
  Summary ratio_stats;  // included repositories only
  Summary ld_distribution_stats;  // duplicate pairs pooled over included repositories
  CloneTypeBreakdown clone_type_breakdown;  // included repositories only
  std::vector<std::string> warnings;
  AnalysisConfig effective_config;

  friend bool operator==(const CorpusReport&, const CorpusReport&) = default;
};

struct FilterResult {
  std::vector<const RepositoryReport*> included;
  std::vector<const RepositoryReport*> excluded;
};

/// A repository is included iff it has at least `min_cells` code cells.
FilterResult filter_repositories(std::span<const RepositoryReport> reports,
                                 std::size_t min_cells);

/// Builds the corpus report. `failures` lists repositories that could not
/// be scanned at all; they appear as rows with `error` set.
CorpusReport aggregate(std::span<const RepositoryReport> reports, const AnalysisConfig& config,
                       std::span<const RepositorySummary> failures = {});

}  // namespace nbdup
