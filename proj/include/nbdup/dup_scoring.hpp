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
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "nbdup/normalize.hpp"

namespace nbdup {

/// Weights and cutoffs of the duplicate ratio
///   DR = LD / ((log avglen)^lambda1 + (log avgloc)^lambda2).
struct ScoringConfig {
  double lambda1 = 6.0;  // character-length term
  double lambda2 = 8.0;  // lines-of-code term
  double log_base = 10.0;
  double dr_threshold = 0.3;  // duplicate iff DR <= threshold
  double diagnostic_max_dr = 1.0;  // histogram coverage limit

  /// Throws ConfigError when a field is out of range.
  void validate() const;

  friend bool operator==(const ScoringConfig&, const ScoringConfig&) = default;
};

enum class CloneType { Type1, Type2, Type3 };

std::string_view to_string(CloneType type);
/// Throws ConfigError for unknown names.
CloneType clone_type_from_string(std::string_view name);

struct DuplicatePair {
  CellRef a;  // a < b canonically
  CellRef b;
  std::size_t ld = 0;
  double dr = 0.0;
  CloneType clone_type = CloneType::Type1;

  friend bool operator==(const DuplicatePair&, const DuplicatePair&) = default;
};

/// Ten decile bands over [0, 1]; DR in (1, diagnostic_max_dr] lands in the
/// overflow slot.
inline constexpr std::size_t kDecileBands = 10;
inline constexpr std::size_t kOverflowBand = kDecileBands;

/// Histogram slot for a DR value <= diagnostic_max_dr.
std::size_t dr_band(double dr);

/// Pair that did not make the cutoff. `band` is empty when DR is above
/// diagnostic_max_dr (including pairs pruned before any distance was computed).
struct NotDuplicate {
  std::optional<std::size_t> band;
  friend bool operator==(const NotDuplicate&, const NotDuplicate&) = default;
};

/// A duplicate also records its band so histograms count every pair with
/// DR <= diagnostic_max_dr.
struct ScoredDuplicate {
  DuplicatePair pair;
  std::size_t band = 0;
};

using PairOutcome = std::variant<ScoredDuplicate, NotDuplicate>;

/// Terms of the denominator; each log term is clamped to 0 when its argument
/// is <= 1.
struct DenominatorTerms {
  double avglen = 0.0;
  double avgloc = 0.0;
  double length_term = 0.0;
  double loc_term = 0.0;
  double total() const { return length_term + loc_term; }
};

DenominatorTerms denominator_terms(std::size_t chars1, std::size_t chars2, std::size_t loc1,
                                   std::size_t loc2, const ScoringConfig& cfg);
double denominator(const NormalizedCell& c1, const NormalizedCell& c2, const ScoringConfig& cfg);

/// LD / denominator, 0 when LD == 0, +infinity when the denominator is 0.
double ratio_from_distance(std::size_t ld, double denom);
double duplicate_ratio(const NormalizedCell& c1, const NormalizedCell& c2,
                       const ScoringConfig& cfg);

/// Largest LD that can still give DR <= diagnostic_max_dr.
std::size_t admissible_distance(double denom, const ScoringConfig& cfg);

/// Type1 when LD is 0, Type2 when the identifier-abstracted texts match,
/// Type3 otherwise.
CloneType classify(std::size_t ld, std::string_view abstracted1, std::string_view abstracted2);

/// Scores one pair using the bounded distance engine. Requires
/// c1.ref < c2.ref.
PairOutcome score_pair(const NormalizedCell& c1, const NormalizedCell& c2,
                       const ScoringConfig& cfg, const KeywordSet& keywords);

}  // namespace nbdup
