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

#include <cstddef>

#include "nbdup/dup_scoring.hpp"
#include "nbdup/normalize.hpp"

namespace nbdup {

inline constexpr std::size_t kDefaultMinCells = 28;
inline constexpr std::size_t kDefaultMaxCellChars = 100'000;

/// Every setting that can change a reported number. Reports embed it whole.
struct AnalysisConfig {
  ScoringConfig scoring;
  std::size_t min_cells = kDefaultMinCells;
  std::size_t max_cell_chars = kDefaultMaxCellChars;  // longer cells are truncated
  CommentRules comment_rules = CommentRules::defaults();
  KeywordTable keywords = KeywordTable::defaults();
  /// Length-difference prune and bounded distance. Turning this off
  /// computes the full distance for every pair; results are identical.
  bool pruning = true;

  void validate() const;

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

}  // namespace nbdup
