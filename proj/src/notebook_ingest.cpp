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

#include "nbdup/notebook_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "nbdup/error.hpp"

namespace nbdup {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Sources are either a string or a list of strings with line terminators
// stored inline, so list elements are joined with no separator.
std::string join_source(const json& field, const std::string& where) {
  if (field.is_null()) return {};
  if (field.is_string()) return field.get<std::string>();
  if (field.is_array()) {
    std::string out;
    for (const auto& part : field) {
      if (!part.is_string()) {
        throw NotebookParseError(where + ": source list holds a non-string element");
      }
      out += part.get_ref<const std::string&>();
    }
    return out;
  }
  throw NotebookParseError(where + ": source is neither a string nor a list");
}

std::optional<std::string> metadata_language(const json& doc) {
  const auto meta = doc.find("metadata");
  if (meta == doc.end() || !meta->is_object()) return std::nullopt;
  if (auto ks = meta->find("kernelspec"); ks != meta->end() && ks->is_object()) {
    if (auto lang = ks->find("language"); lang != ks->end() && lang->is_string() &&
                                          !lang->get_ref<const std::string&>().empty()) {
      return lowercase(lang->get<std::string>());
    }
  }
  if (auto li = meta->find("language_info"); li != meta->end() && li->is_object()) {
    if (auto name = li->find("name"); name != li->end() && name->is_string() &&
                                      !name->get_ref<const std::string&>().empty()) {
      return lowercase(name->get<std::string>());
    }
  }
  return std::nullopt;
}

void collect_cells(const json& cells, const char* source_key, ParsedNotebook& out,
                   const std::string& repo_id, const std::string& path) {
  if (!cells.is_array()) {
    throw NotebookParseError(path + ": cells is not a list");
  }
  for (const auto& cell : cells) {
    if (!cell.is_object()) {
      throw NotebookParseError(path + ": cell is not an object");
    }
    const auto type = cell.find("cell_type");
    if (type == cell.end() || !type->is_string() ||
        type->get_ref<const std::string&>() != "code") {
      continue;
    }
    std::string source;
    if (auto src = cell.find(source_key); src != cell.end()) {
      source = join_source(*src, path);
    }
    CodeCell code;
    code.ref = CellRef{repo_id, path, out.cells.size()};
    code.source = std::move(source);
    code.language_hint = out.language;
    out.cells.push_back(std::move(code));
  }
}

}  // namespace

NotebookListing discover_notebooks(const fs::path& root) {
  std::error_code ec;
  const auto status = fs::status(root, ec);
  if (ec || !fs::is_directory(status)) {
    throw Error("cannot read repository root '" + root.string() + "'");
  }
  fs::directory_iterator probe(root, ec);
  if (ec) {
    throw Error("cannot read repository root '" + root.string() + "': " + ec.message());
  }

  NotebookListing listing;
  fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
  const fs::recursive_directory_iterator end;
  while (!ec && it != end) {
    const auto& entry = *it;
    std::error_code entry_ec;
    if (entry.is_symlink(entry_ec)) {
      // not followed
    } else if (entry.is_directory(entry_ec)) {
      fs::directory_iterator sub(entry.path(), entry_ec);
      if (entry_ec) {
        listing.warnings.push_back("skipping unreadable directory '" +
                                   fs::relative(entry.path(), root).generic_string() +
                                   "': " + entry_ec.message());
        it.disable_recursion_pending();
      }
    } else if (entry.is_regular_file(entry_ec) &&
               entry.path().extension() == kNotebookExtension) {
      listing.paths.push_back(fs::relative(entry.path(), root).generic_string());
    }
    it.increment(ec);
    if (ec) {
      listing.warnings.push_back("directory walk stopped early: " + ec.message());
    }
  }
  std::sort(listing.paths.begin(), listing.paths.end());
  return listing;
}

ParsedNotebook parse_notebook_text(std::string_view json_text, const std::string& repo_id,
                                   const std::string& notebook_path) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw NotebookParseError(notebook_path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw NotebookParseError(notebook_path + ": top level is not an object");
  }

  ParsedNotebook out;
  if (auto lang = metadata_language(doc)) {
    out.language = *lang;
  } else {
    out.language = std::string(kDefaultLanguage);
    out.language_defaulted = true;
  }

  if (auto cells = doc.find("cells"); cells != doc.end()) {
    collect_cells(*cells, "source", out, repo_id, notebook_path);
  } else if (auto sheets = doc.find("worksheets"); sheets != doc.end()) {
    if (!sheets->is_array()) {
      throw NotebookParseError(notebook_path + ": worksheets is not a list");
    }
    for (const auto& sheet : *sheets) {
      if (!sheet.is_object()) {
        throw NotebookParseError(notebook_path + ": worksheet is not an object");
      }
      if (auto cells = sheet.find("cells"); cells != sheet.end()) {
        collect_cells(*cells, "input", out, repo_id, notebook_path);
      }
    }
  } else {
    throw NotebookParseError(notebook_path + ": neither cells nor worksheets present");
  }
  return out;
}

ParsedNotebook parse_notebook(const fs::path& root, const std::string& relative_path,
                              const std::string& repo_id) {
  std::ifstream in(root / fs::path(relative_path), std::ios::binary);
  if (!in) {
    throw NotebookParseError(relative_path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_notebook_text(buffer.str(), repo_id, relative_path);
}

}  // namespace nbdup
