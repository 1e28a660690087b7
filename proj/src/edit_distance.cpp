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

#include "nbdup/edit_distance.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "nbdup/utf8.hpp"

namespace nbdup {
namespace {

std::size_t abs_diff(std::size_t x, std::size_t y) { return x > y ? x - y : y - x; }

// Removes the common prefix and suffix; Levenshtein distance is unchanged.
void trim_affixes(std::u32string_view& a, std::u32string_view& b) {
  std::size_t p = 0;
  while (p < a.size() && p < b.size() && a[p] == b[p]) ++p;
  a.remove_prefix(p);
  b.remove_prefix(p);
  std::size_t s = 0;
  while (s < a.size() && s < b.size() && a[a.size() - 1 - s] == b[b.size() - 1 - s]) ++s;
  a.remove_suffix(s);
  b.remove_suffix(s);
}

// Per-character match masks for the pattern. ASCII is a direct lookup; other
// scalars go through a sorted side table.
class PatternMasks {
 public:
  explicit PatternMasks(std::u32string_view pattern)
      : words_((pattern.size() + 63) / 64) {
    ascii_slot_.fill(-1);
    for (char32_t c : pattern) {
      if (c < 128) {
        if (ascii_slot_[c] < 0) ascii_slot_[c] = new_slot();
      } else {
        other_.emplace_back(c, 0);
      }
    }
    std::sort(other_.begin(), other_.end());
    other_.erase(std::unique(other_.begin(), other_.end(),
                             [](const auto& x, const auto& y) { return x.first == y.first; }),
                 other_.end());
    for (auto& entry : other_) entry.second = new_slot();

    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const int32_t slot = slot_of(pattern[i]);
      masks_[static_cast<std::size_t>(slot) * words_ + i / 64] |= uint64_t{1} << (i % 64);
    }
  }

  std::size_t words() const { return words_; }

  // nullptr when the character does not occur in the pattern.
  const uint64_t* row(char32_t c) const {
    const int32_t slot = slot_of(c);
    return slot < 0 ? nullptr : &masks_[static_cast<std::size_t>(slot) * words_];
  }

 private:
  int32_t new_slot() {
    masks_.resize(masks_.size() + words_, 0);
    return slot_count_++;
  }

  int32_t slot_of(char32_t c) const {
    if (c < 128) return ascii_slot_[c];
    auto it = std::lower_bound(other_.begin(), other_.end(), c,
                               [](const auto& entry, char32_t key) { return entry.first < key; });
    return (it != other_.end() && it->first == c) ? it->second : -1;
  }

  std::size_t words_;
  int32_t slot_count_ = 0;
  std::array<int32_t, 128> ascii_slot_{};
  std::vector<std::pair<char32_t, int32_t>> other_;
  std::vector<uint64_t> masks_;
};

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  // row holds distances from a[0..j) to the current prefix of b.
  std::vector<std::size_t> row(a.size() + 1);
  for (std::size_t j = 0; j <= a.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= b.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= a.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t subst = diag + (a[j - 1] == b[i - 1] ? 0 : 1);
      row[j] = std::min({subst, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[a.size()];
}

namespace detail {

DistanceResult banded_dp(std::u32string_view a, std::u32string_view b, std::size_t bound) {
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (m - n > bound) return DistanceResult::exceeds(bound);
  if (n == 0) return DistanceResult::exact(m);

  // Rows run over a (the shorter text); columns over b. Cells outside
  // |i - j| <= bound hold kInf.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::size_t> prev(m + 1, kInf);
  std::vector<std::size_t> cur(m + 1, kInf);
  for (std::size_t j = 0; j <= std::min(m, bound); ++j) prev[j] = j;

  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > bound ? i - bound : 0;
    const std::size_t hi = std::min(m, i + bound);
    if (lo > 0) cur[lo - 1] = kInf;
    std::size_t row_min = kInf;
    std::size_t j = lo;
    if (j == 0) {
      cur[0] = i;
      row_min = i;
      j = 1;
    }
    for (; j <= hi; ++j) {
      const std::size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const std::size_t del = prev[j] + 1;
      const std::size_t ins = cur[j - 1] + 1;
      const std::size_t v = std::min({subst, del, ins});
      cur[j] = v;
      row_min = std::min(row_min, v);
    }
    if (hi < m) cur[hi + 1] = kInf;
    if (row_min > bound) return DistanceResult::exceeds(bound);
    std::swap(prev, cur);
  }
  const std::size_t d = prev[m];
  return d <= bound ? DistanceResult::exact(d) : DistanceResult::exceeds(bound);
}

std::size_t bit_parallel(std::u32string_view a, std::u32string_view b) {
  // Pattern is the shorter text so the column needs fewer words.
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return b.size();

  const PatternMasks masks(a);
  const std::size_t words = masks.words();
  const uint64_t last = uint64_t{1} << ((a.size() - 1) % 64);
  std::vector<uint64_t> vp(words, ~uint64_t{0});
  std::vector<uint64_t> vn(words, 0);
  std::size_t score = a.size();

  for (char32_t c : b) {
    const uint64_t* eq = masks.row(c);
    uint64_t hp_carry = 1;
    uint64_t hn_carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const uint64_t pm = eq ? eq[w] : 0;
      const uint64_t x = pm | hn_carry;
      const uint64_t d0 = (((x & vp[w]) + vp[w]) ^ vp[w]) | x | vn[w];
      uint64_t hp = vn[w] | ~(d0 | vp[w]);
      uint64_t hn = d0 & vp[w];
      const uint64_t hp_in = hp_carry;
      const uint64_t hn_in = hn_carry;
      if (w + 1 < words) {
        hp_carry = hp >> 63;
        hn_carry = hn >> 63;
      } else {
        hp_carry = (hp & last) ? 1 : 0;
        hn_carry = (hn & last) ? 1 : 0;
      }
      hp = (hp << 1) | hp_in;
      hn = (hn << 1) | hn_in;
      vp[w] = hn | ~(d0 | hp);
      vn[w] = hp & d0;
    }
    score += hp_carry;
    score -= hn_carry;
  }
  return score;
}

}  // namespace detail

DistanceResult levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                   std::size_t bound) {
  if (abs_diff(a.size(), b.size()) > bound) return DistanceResult::exceeds(bound);
  trim_affixes(a, b);
  const std::size_t shorter = std::min(a.size(), b.size());
  const std::size_t longer = std::max(a.size(), b.size());
  if (shorter == 0) {
    return longer <= bound ? DistanceResult::exact(longer) : DistanceResult::exceeds(bound);
  }
  // Pick whichever engine touches fewer cells; a bit-parallel word step
  // costs roughly as much as a handful of DP cells.
  const std::size_t band_cells = (2 * std::min(bound, longer) + 1) * shorter;
  const std::size_t bp_cells = 8 * longer * ((shorter + 63) / 64);
  if (band_cells <= bp_cells) return detail::banded_dp(a, b, bound);
  const std::size_t d = detail::bit_parallel(a, b);
  return d <= bound ? DistanceResult::exact(d) : DistanceResult::exceeds(bound);
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(std::u32string_view(utf8::decode(a)), std::u32string_view(utf8::decode(b)));
}

DistanceResult levenshtein_bounded(std::string_view a, std::string_view b, std::size_t bound) {
  return levenshtein_bounded(std::u32string_view(utf8::decode(a)),
                             std::u32string_view(utf8::decode(b)), bound);
}

}  // namespace nbdup
