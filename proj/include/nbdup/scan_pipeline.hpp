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

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nbdup/clone_grouping.hpp"
#include "nbdup/config.hpp"

namespace nbdup {

struct ScanConfig {
  AnalysisConfig analysis;
  std::size_t worker_count = 1;  // results do not depend on it

  void validate() const;
};

/// Logical CPU count, at least 1.
std::size_t default_worker_count();

/// Repository id for a root path: its final path component.
std::string repo_id_for(const std::filesystem::path& root);

/// Runs ingest, normalization, pairwise scoring and grouping over every
/// notebook under `root`. `repo_id` defaults to repo_id_for(root). Throws
/// Error when the root cannot be read.
RepositoryReport scan_repository(const std::filesystem::path& root, const ScanConfig& cfg,
                                 std::string repo_id = {});

/// Same pipeline over cells already in memory (all from one repository).
/// `counters` carries ingest-level tallies into the report.
RepositoryReport scan_cells(std::string repo_id, std::span<const CodeCell> cells,
                            const ScanConfig& cfg, ScanCounters counters = {});

}  // namespace nbdup
