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

#include <array>
#include <span>
#include <string>
#include <vector>

#include "nbdup/config.hpp"
#include "nbdup/dup_scoring.hpp"
#include "nbdup/stats.hpp"

namespace nbdup {

struct CloneClass {
  std::vector<CellRef> members;  // sorted canonically, size >= 2
  CellRef representative() const { return members.front(); }

  friend bool operator==(const CloneClass&, const CloneClass&) = default;
};

/// Connected components of the duplicate relation, sorted by representative.
std::vector<CloneClass> build_clone_classes(std::span<const DuplicatePair> pairs);

/// Every input needed to assemble a repository report besides the cells.
struct ScanCounters {
  std::size_t notebook_count = 0;
  std::vector<std::string> unparseable_notebooks;
  std::size_t empty_cells_excluded = 0;
  std::size_t truncated_cells = 0;
  std::size_t language_defaulted_notebooks = 0;
  std::size_t candidate_pairs = 0;
  std::size_t pruned_pairs = 0;
  std::vector<std::string> warnings;
};

struct RepositoryReport {
  std::string repo_id;
  std::size_t notebook_count = 0;
  std::size_t unparseable_count = 0;
  std::vector<std::string> unparseable_notebooks;
  std::size_t total_code_cells = 0;  // after empty-cell exclusion
  std::size_t empty_cells_excluded = 0;
  std::size_t truncated_cells = 0;
  std::size_t language_defaulted_notebooks = 0;
  std::size_t candidate_pairs = 0;
  std::size_t pruned_pairs = 0;
  std::size_t scored_pairs = 0;  // pairs with DR <= diagnostic_max_dr
  std::vector<DuplicatePair> duplicate_pairs;
  std::vector<CloneClass> clone_classes;
  std::size_t duplicated_cell_count = 0;  // sum of (class size - 1)
  double duplicates_ratio = 0.0;
  std::size_t member_cell_count = 0;  // cells in any duplicate pair
  double members_ratio = 0.0;
  std::array<std::size_t, kDecileBands> dr_band_histogram{};
  std::size_t dr_overflow_count = 0;  // 1.0 < DR <= diagnostic_max_dr
  Summary ld_stats;
  std::vector<std::string> warnings;
  AnalysisConfig effective_config;

  std::size_t type_count(CloneType type) const;

  friend bool operator==(const RepositoryReport&, const RepositoryReport&) = default;
};

/// Running totals over pair outcomes. Pairs skipped by a prune count as
/// NotDuplicate with no band.
struct PairTally {
  std::vector<DuplicatePair> duplicates;
  std::array<std::size_t, kDecileBands> histogram{};
  std::size_t overflow = 0;
  std::size_t scored = 0;

  void add(const PairOutcome& outcome);
  void merge(PairTally&& other);
};

/// Assembles a report from the admitted cells and the tallied outcomes of
/// every pair. Duplicates may arrive in any order.
RepositoryReport repository_report(std::string repo_id, std::span<const NormalizedCell> cells,
                                   PairTally tally, ScanCounters counters,
                                   const AnalysisConfig& config);

}  // namespace nbdup
