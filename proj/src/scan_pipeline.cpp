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

#include "nbdup/scan_pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "nbdup/edit_distance.hpp"
#include "nbdup/error.hpp"
#include "nbdup/notebook_ingest.hpp"
#include "nbdup/utf8.hpp"

namespace nbdup {
namespace {

// A normalized cell plus everything pair scoring needs, computed once.
struct PreparedCell {
  NormalizedCell cell;
  std::u32string chars;
  std::string abstracted;
};

void truncate_cell(NormalizedCell& cell, std::u32string& chars, std::size_t max_chars) {
  chars.resize(max_chars);
  while (!chars.empty() && (chars.back() == U'\n' || chars.back() == U' ' ||
                            chars.back() == U'\t' || chars.back() == U'\r' ||
                            chars.back() == U'\f' || chars.back() == U'\v')) {
    chars.pop_back();
  }
  cell.text = utf8::encode(chars);
  cell.char_count = chars.size();
  cell.loc = 1 + static_cast<std::size_t>(std::count(chars.begin(), chars.end(), U'\n'));
}

PairOutcome score_prepared(const PreparedCell& x, const PreparedCell& y,
                           const AnalysisConfig& cfg, std::size_t& pruned) {
  const ScoringConfig& sc = cfg.scoring;
  const double denom = denominator(x.cell, y.cell, sc);
  std::size_t ld = 0;
  if (cfg.pruning) {
    const std::size_t bound = admissible_distance(denom, sc);
    const std::size_t diff = x.chars.size() > y.chars.size() ? x.chars.size() - y.chars.size()
                                                              : y.chars.size() - x.chars.size();
    if (diff > bound) {
      ++pruned;
      return NotDuplicate{};
    }
    const DistanceResult result = levenshtein_bounded(x.chars, y.chars, bound);
    if (result.exceeds_bound()) return NotDuplicate{};
    ld = result.value();
  } else {
    ld = levenshtein(x.chars, y.chars);
  }

  const double dr = ratio_from_distance(ld, denom);
  if (dr > sc.diagnostic_max_dr) return NotDuplicate{};
  const std::size_t band = dr_band(dr);
  if (dr > sc.dr_threshold) return NotDuplicate{band};
  const CloneType type = classify(ld, x.abstracted, y.abstracted);
  return ScoredDuplicate{DuplicatePair{x.cell.ref, y.cell.ref, ld, dr, type}, band};
}

}  // namespace

void ScanConfig::validate() const {
  analysis.validate();
  if (worker_count == 0) throw ConfigError("worker count must be at least 1");
}

std::size_t default_worker_count() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

std::string repo_id_for(const std::filesystem::path& root) {
  auto normalized = root.lexically_normal();
  if (!normalized.has_filename()) normalized = normalized.parent_path();
  std::string id = normalized.filename().generic_string();
  if (id.empty() || id == ".") {
    id = std::filesystem::absolute(root).lexically_normal().filename().generic_string();
  }
  return id.empty() ? std::string("repository") : id;
}

RepositoryReport scan_cells(std::string repo_id, std::span<const CodeCell> cells,
                            const ScanConfig& cfg, ScanCounters counters) {
  cfg.validate();
  const AnalysisConfig& ac = cfg.analysis;

  std::vector<PreparedCell> prepared;
  prepared.reserve(cells.size());
  for (const CodeCell& code : cells) {
    auto normalized = normalize_cell(code, ac.comment_rules);
    if (!normalized) {
      ++counters.empty_cells_excluded;
      continue;
    }
    PreparedCell p{std::move(*normalized), {}, {}};
    p.chars = utf8::decode(p.cell.text);
    if (p.chars.size() > ac.max_cell_chars) {
      truncate_cell(p.cell, p.chars, ac.max_cell_chars);
      ++counters.truncated_cells;
    }
    p.abstracted = abstract_identifiers(p.cell.text, ac.keywords.for_language(p.cell.language));
    prepared.push_back(std::move(p));
  }
  std::sort(prepared.begin(), prepared.end(),
            [](const PreparedCell& x, const PreparedCell& y) { return x.cell.ref < y.cell.ref; });

  const std::size_t n = prepared.size();
  counters.candidate_pairs = n < 2 ? 0 : n * (n - 1) / 2;

  // Row i scores pairs (i, j > i). Rows are handed out dynamically; each
  // row's tally lands in its own slot and slots are merged in row order.
  std::vector<PairTally> row_tallies(n);
  std::vector<std::size_t> row_pruned(n, 0);
  std::atomic<std::size_t> next_row{0};
  auto worker = [&] {
    for (std::size_t i = next_row++; i < n; i = next_row++) {
      PairTally& tally = row_tallies[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        tally.add(score_prepared(prepared[i], prepared[j], ac, row_pruned[i]));
      }
    }
  };
  const std::size_t threads = std::min(cfg.worker_count, std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  PairTally total;
  for (std::size_t i = 0; i < n; ++i) {
    total.merge(std::move(row_tallies[i]));
    counters.pruned_pairs += row_pruned[i];
  }

  if (n < ac.min_cells) {
    counters.warnings.push_back("repository has " + std::to_string(n) +
                                " code cells, below the minimum of " +
                                std::to_string(ac.min_cells) + " used for corpus statistics");
  }
  if (counters.truncated_cells > 0) {
    counters.warnings.push_back(std::to_string(counters.truncated_cells) +
                                " cells truncated to " + std::to_string(ac.max_cell_chars) +
                                " characters for distance computation");
  }

  std::vector<NormalizedCell> admitted;
  admitted.reserve(n);
  for (auto& p : prepared) admitted.push_back(std::move(p.cell));
  return repository_report(std::move(repo_id), admitted, std::move(total), std::move(counters),
                           ac);
}

RepositoryReport scan_repository(const std::filesystem::path& root, const ScanConfig& cfg,
                                 std::string repo_id) {
  cfg.validate();
  if (repo_id.empty()) repo_id = repo_id_for(root);
  NotebookListing listing = discover_notebooks(root);

  ScanCounters counters;
  counters.notebook_count = listing.paths.size();
  counters.warnings = std::move(listing.warnings);

  std::vector<CodeCell> cells;
  for (const auto& path : listing.paths) {
    try {
      ParsedNotebook nb = parse_notebook(root, path, repo_id);
      if (nb.language_defaulted) ++counters.language_defaulted_notebooks;
      for (auto& c : nb.cells) cells.push_back(std::move(c));
    } catch (const NotebookParseError&) {
      counters.unparseable_notebooks.push_back(path);
    }
  }
  if (!counters.unparseable_notebooks.empty()) {
    counters.warnings.push_back(std::to_string(counters.unparseable_notebooks.size()) +
                                " notebooks could not be parsed");
  }
  if (counters.language_defaulted_notebooks > 0) {
    counters.warnings.push_back(std::to_string(counters.language_defaulted_notebooks) +
                                " notebooks lack kernel language metadata; assumed " +
                                std::string(kDefaultLanguage));
  }
  return scan_cells(repo_id, cells, cfg, std::move(counters));
}

}  // namespace nbdup
