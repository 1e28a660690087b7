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

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nbdup {

inline constexpr std::string_view kNotebookExtension = ".ipynb";
inline constexpr std::string_view kDefaultLanguage = "python";

/// Provenance of a code cell. Ordering is the canonical cell ordering:
/// repository, then notebook path, then cell index.
struct CellRef {
  std::string repo_id;
  std::string notebook_path;  // repo-relative, forward slashes
  std::size_t cell_index = 0;  // counts code cells only

  friend auto operator<=>(const CellRef&, const CellRef&) = default;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

struct CodeCell {
  CellRef ref;
  std::string source;  // verbatim from the file
  std::optional<std::string> language_hint;
};

/// Code cells of one notebook plus how its language was determined.
struct ParsedNotebook {
  std::vector<CodeCell> cells;
  std::string language;           // resolved, lowercase
  bool language_defaulted = false;  // no usable kernel metadata
};

struct NotebookListing {
  std::vector<std::string> paths;  // relative to root, sorted
  std::vector<std::string> warnings;
};

/// Recursively lists *.ipynb files under `root`. Symbolic links are
/// skipped. Throws Error if `root` itself cannot be read; unreadable
/// subdirectories become warnings.
NotebookListing discover_notebooks(const std::filesystem::path& root);

/// Parses notebook JSON (nbformat v3 or v4). Throws NotebookParseError on
/// malformed input.
ParsedNotebook parse_notebook_text(std::string_view json_text,
                                   const std::string& repo_id,
                                   const std::string& notebook_path);

/// Reads and parses `root / relative_path`.
ParsedNotebook parse_notebook(const std::filesystem::path& root,
                              const std::string& relative_path,
                              const std::string& repo_id);

}  // namespace nbdup
