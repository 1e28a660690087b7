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

#include "nbdup/dup_scoring.hpp"

#include <cmath>

#include "nbdup/edit_distance.hpp"
#include "nbdup/error.hpp"
#include "nbdup/utf8.hpp"

namespace nbdup {
namespace {

double clamped_power(double argument, double base, double exponent) {
  if (!(argument > 1.0)) return 0.0;
  return std::pow(std::log(argument) / std::log(base), exponent);
}

}  // namespace

void ScoringConfig::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(lambda1) || lambda1 <= 0) throw ConfigError("lambda1 must be positive");
  if (!finite(lambda2) || lambda2 <= 0) throw ConfigError("lambda2 must be positive");
  if (!finite(log_base) || log_base <= 1) throw ConfigError("log base must be greater than 1");
  if (!finite(dr_threshold) || dr_threshold < 0) {
    throw ConfigError("threshold must be nonnegative");
  }
  if (!finite(diagnostic_max_dr) || diagnostic_max_dr < dr_threshold) {
    throw ConfigError("max DR must be at least the threshold");
  }
}

std::string_view to_string(CloneType type) {
  switch (type) {
    case CloneType::Type1: return "type1";
    case CloneType::Type2: return "type2";
    case CloneType::Type3: return "type3";
  }
  return "type3";
}

CloneType clone_type_from_string(std::string_view name) {
  if (name == "type1") return CloneType::Type1;
  if (name == "type2") return CloneType::Type2;
  if (name == "type3") return CloneType::Type3;
  throw ConfigError("unknown clone type '" + std::string(name) + "'");
}

std::size_t dr_band(double dr) {
  if (dr > 1.0) return kOverflowBand;
  const auto band = static_cast<std::size_t>(std::floor(dr * 10.0));
  return std::min(band, kDecileBands - 1);
}

DenominatorTerms denominator_terms(std::size_t chars1, std::size_t chars2, std::size_t loc1,
                                   std::size_t loc2, const ScoringConfig& cfg) {
  DenominatorTerms t;
  t.avglen = (static_cast<double>(chars1) + static_cast<double>(chars2)) / 2.0;
  t.avgloc = (static_cast<double>(loc1) + static_cast<double>(loc2)) / 2.0;
  t.length_term = clamped_power(t.avglen, cfg.log_base, cfg.lambda1);
  t.loc_term = clamped_power(t.avgloc, cfg.log_base, cfg.lambda2);
  return t;
}

double denominator(const NormalizedCell& c1, const NormalizedCell& c2, const ScoringConfig& cfg) {
  return denominator_terms(c1.char_count, c2.char_count, c1.loc, c2.loc, cfg).total();
}

double ratio_from_distance(std::size_t ld, double denom) {
  if (ld == 0) return 0.0;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(ld) / denom;
}

double duplicate_ratio(const NormalizedCell& c1, const NormalizedCell& c2,
                       const ScoringConfig& cfg) {
  const std::size_t ld = levenshtein(c1.text, c2.text);
  return ratio_from_distance(ld, denominator(c1, c2, cfg));
}

std::size_t admissible_distance(double denom, const ScoringConfig& cfg) {
  const double limit = std::floor(cfg.diagnostic_max_dr * denom);
  if (!(limit > 0.0)) return 0;
  if (limit >= static_cast<double>(std::numeric_limits<std::size_t>::max() / 2)) {
    return std::numeric_limits<std::size_t>::max() / 2;
  }
  return static_cast<std::size_t>(limit);
}

CloneType classify(std::size_t ld, std::string_view abstracted1, std::string_view abstracted2) {
  if (ld == 0) return CloneType::Type1;
  if (abstracted1 == abstracted2) return CloneType::Type2;
  return CloneType::Type3;
}

PairOutcome score_pair(const NormalizedCell& c1, const NormalizedCell& c2,
                       const ScoringConfig& cfg, const KeywordSet& keywords) {
  const double denom = denominator(c1, c2, cfg);
  const std::size_t bound = admissible_distance(denom, cfg);
  const auto result = levenshtein_bounded(utf8::decode(c1.text), utf8::decode(c2.text), bound);
  if (result.exceeds_bound()) return NotDuplicate{};

  const double dr = ratio_from_distance(result.value(), denom);
  if (dr > cfg.diagnostic_max_dr) return NotDuplicate{};
  const std::size_t band = dr_band(dr);
  if (dr > cfg.dr_threshold) return NotDuplicate{band};

  const CloneType type =
      result.value() == 0
          ? CloneType::Type1
          : classify(result.value(), abstract_identifiers(c1.text, keywords),
                     abstract_identifiers(c2.text, keywords));
  return ScoredDuplicate{DuplicatePair{c1.ref, c2.ref, result.value(), dr, type}, band};
}

}  // namespace nbdup
