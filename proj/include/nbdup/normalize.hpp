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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "nbdup/notebook_ingest.hpp"

namespace nbdup {

/// Placeholder substituted for every non-keyword identifier. It is itself a
/// single identifier token (µ counts as a letter) that maps to itself, so
/// abstraction is idempotent.
inline constexpr std::string_view kIdentifierPlaceholder = "\xC2\xB5ID";

using KeywordSet = std::set<std::string, std::less<>>;

/// Line-comment marker per language. Unknown languages use `fallback`.
struct CommentRules {
  std::map<std::string, std::string, std::less<>> markers;
  std::string fallback = "#";

  static CommentRules defaults();
  /// Plain text, one `<language> <marker>` entry per line. A `default`
  /// entry replaces the fallback marker. Throws ConfigError.
  static CommentRules load(const std::filesystem::path& file);

  std::string_view marker_for(std::string_view language) const;

  friend bool operator==(const CommentRules&, const CommentRules&) = default;
};

/// Reserved words per language. Unknown languages get the python set.
struct KeywordTable {
  std::map<std::string, KeywordSet, std::less<>> by_language;
  /// When set, overrides every per-language set (loaded from --keywords).
  std::optional<KeywordSet> override_set;

  static KeywordTable defaults();
  /// One keyword per line; blank lines ignored. Throws ConfigError.
  static KeywordSet load(const std::filesystem::path& file);

  const KeywordSet& for_language(std::string_view language) const;

  friend bool operator==(const KeywordTable&, const KeywordTable&) = default;
};

KeywordSet python_keywords();
KeywordSet r_keywords();
KeywordSet javascript_keywords();

struct NormalizedCell {
  CellRef ref;
  std::string text;  // UTF-8, surviving lines joined by '\n'
  std::size_t char_count = 0;  // Unicode scalar values in text
  std::size_t loc = 0;
  std::string language;

  friend bool operator==(const NormalizedCell&, const NormalizedCell&) = default;
};

/// Strips line comments (quote-aware within a line), trims each line and
/// drops blank ones. Returns nullopt when nothing survives.
std::optional<NormalizedCell> normalize_cell(const CodeCell& cell, const CommentRules& rules);

/// Removes the comment suffix of a single line. The marker only counts
/// outside single-, double- or back-quoted spans opened on the same line.
std::string_view strip_line_comment(std::string_view line, std::string_view marker);

/// Replaces every identifier token not in `keywords` with the placeholder.
std::string abstract_identifiers(std::string_view text, const KeywordSet& keywords);

}  // namespace nbdup
