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

#include "nbdup/clone_grouping.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nbdup {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace

std::vector<CloneClass> build_clone_classes(std::span<const DuplicatePair> pairs) {
  // Index the distinct endpoints in canonical order.
  std::set<CellRef> endpoints;
  for (const auto& p : pairs) {
    endpoints.insert(p.a);
    endpoints.insert(p.b);
  }
  const std::vector<CellRef> cells(endpoints.begin(), endpoints.end());
  auto index_of = [&](const CellRef& ref) {
    return static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), ref) -
                                    cells.begin());
  };

  UnionFind uf(cells.size());
  for (const auto& p : pairs) uf.unite(index_of(p.a), index_of(p.b));

  // Cells are visited in canonical order, so each class's members come out
  // sorted and classes are created in representative order.
  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<CloneClass> classes;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::size_t root = uf.find(i);
    auto [it, inserted] = class_of_root.emplace(root, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].members.push_back(cells[i]);
  }
  return classes;
}

std::size_t RepositoryReport::type_count(CloneType type) const {
  return static_cast<std::size_t>(
      std::count_if(duplicate_pairs.begin(), duplicate_pairs.end(),
                    [type](const DuplicatePair& p) { return p.clone_type == type; }));
}

void PairTally::add(const PairOutcome& outcome) {
  if (const auto* dup = std::get_if<ScoredDuplicate>(&outcome)) {
    duplicates.push_back(dup->pair);
    ++scored;
    if (dup->band == kOverflowBand) {
      ++overflow;
    } else {
      ++histogram[dup->band];
    }
    return;
  }
  const auto& miss = std::get<NotDuplicate>(outcome);
  if (!miss.band) return;
  ++scored;
  if (*miss.band == kOverflowBand) {
    ++overflow;
  } else {
    ++histogram[*miss.band];
  }
}

void PairTally::merge(PairTally&& other) {
  duplicates.insert(duplicates.end(), std::make_move_iterator(other.duplicates.begin()),
                    std::make_move_iterator(other.duplicates.end()));
  for (std::size_t i = 0; i < histogram.size(); ++i) histogram[i] += other.histogram[i];
  overflow += other.overflow;
  scored += other.scored;
}

RepositoryReport repository_report(std::string repo_id, std::span<const NormalizedCell> cells,
                                   PairTally tally, ScanCounters counters,
                                   const AnalysisConfig& config) {
  RepositoryReport r;
  r.repo_id = std::move(repo_id);
  r.notebook_count = counters.notebook_count;
  r.unparseable_notebooks = std::move(counters.unparseable_notebooks);
  std::sort(r.unparseable_notebooks.begin(), r.unparseable_notebooks.end());
  r.unparseable_count = r.unparseable_notebooks.size();
  r.total_code_cells = cells.size();
  r.empty_cells_excluded = counters.empty_cells_excluded;
  r.truncated_cells = counters.truncated_cells;
  r.language_defaulted_notebooks = counters.language_defaulted_notebooks;
  r.candidate_pairs = counters.candidate_pairs;
  r.pruned_pairs = counters.pruned_pairs;
  r.scored_pairs = tally.scored;
  r.dr_band_histogram = tally.histogram;
  r.dr_overflow_count = tally.overflow;
  r.warnings = std::move(counters.warnings);
  r.effective_config = config;

  r.duplicate_pairs = std::move(tally.duplicates);
  std::sort(r.duplicate_pairs.begin(), r.duplicate_pairs.end(),
            [](const DuplicatePair& x, const DuplicatePair& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });

  r.clone_classes = build_clone_classes(r.duplicate_pairs);
  for (const auto& c : r.clone_classes) {
    r.duplicated_cell_count += c.members.size() - 1;
    r.member_cell_count += c.members.size();
  }
  if (r.total_code_cells == 0) {
    r.warnings.push_back("repository has no non-empty code cells; ratios reported as 0");
  } else {
    const auto total = static_cast<double>(r.total_code_cells);
    r.duplicates_ratio = static_cast<double>(r.duplicated_cell_count) / total;
    r.members_ratio = static_cast<double>(r.member_cell_count) / total;
  }

  std::vector<double> lds;
  lds.reserve(r.duplicate_pairs.size());
  for (const auto& p : r.duplicate_pairs) lds.push_back(static_cast<double>(p.ld));
  r.ld_stats = summarize(lds);
  return r;
}

}  // namespace nbdup
