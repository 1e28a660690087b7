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
#include <string_view>

namespace nbdup {

/// Outcome of a bounded distance query.
class DistanceResult {
 public:
  static DistanceResult exact(std::size_t value) { return {false, value}; }
  static DistanceResult exceeds(std::size_t bound) { return {true, bound}; }

  bool is_exact() const { return !exceeds_; }
  bool exceeds_bound() const { return exceeds_; }
  /// The distance when exact, otherwise the bound that was exceeded.
  std::size_t value() const { return value_; }

  friend bool operator==(const DistanceResult&, const DistanceResult&) = default;

 private:
  DistanceResult(bool exceeds, std::size_t value) : exceeds_(exceeds), value_(value) {}
  bool exceeds_;
  std::size_t value_;
};

/// Levenshtein distance over Unicode scalar values. Two-row dynamic program:
/// O(|a|·|b|) time, O(min(|a|,|b|)) memory.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// Exact distance if it is at most `bound`, otherwise ExceedsBound(bound).
/// Returns immediately when the length difference alone exceeds the bound.
DistanceResult levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                   std::size_t bound);

/// UTF-8 convenience overloads.
std::size_t levenshtein(std::string_view a, std::string_view b);
DistanceResult levenshtein_bounded(std::string_view a, std::string_view b, std::size_t bound);

namespace detail {

// The two engines behind levenshtein_bounded, exposed for testing. Both
// expect the common prefix/suffix already removed only as an optimization;
// they are correct on any input.

/// Diagonal band of half-width `bound` with early exit once every cell of a
/// row exceeds the bound.
DistanceResult banded_dp(std::u32string_view a, std::u32string_view b, std::size_t bound);

/// Bit-parallel (Myers/Hyyrö) exact distance, 64 pattern characters per word.
std::size_t bit_parallel(std::u32string_view a, std::u32string_view b);

}  // namespace detail
}  // namespace nbdup
