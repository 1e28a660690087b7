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

#include <doctest.h>

#include <json.hpp>

#include "nbdup/error.hpp"
#include "nbdup/notebook_ingest.hpp"
#include "test_support.hpp"

using namespace nbdup;
using nbdup::testing::fixtures_dir;
using nbdup::testing::TempDir;
using nbdup::testing::write_file;

namespace {

// Independent structural walk: counts code cells without the parser.
std::size_t count_code_cells(const std::filesystem::path& file) {
  const auto doc = nlohmann::json::parse(nbdup::testing::read_file(file));
  std::size_t n = 0;
  auto walk = [&](const nlohmann::json& cells) {
    for (const auto& c : cells) n += c.value("cell_type", "") == "code";
  };
  if (doc.contains("cells")) walk(doc["cells"]);
  if (doc.contains("worksheets"))
    for (const auto& ws : doc["worksheets"]) walk(ws["cells"]);
  return n;
}

}  // namespace

TEST_CASE("discover_notebooks lists notebooks recursively in path order") {
  TempDir dir;
  write_file(dir.path() / "b/y.ipynb", "{}");
  write_file(dir.path() / "a/x.ipynb", "{}");
  write_file(dir.path() / "a/b/c/z.ipynb", "{}");
  write_file(dir.path() / "a/notes.txt", "");
  write_file(dir.path() / "a/x.ipynb.bak", "");
  const auto listing = discover_notebooks(dir.path());
  CHECK(listing.paths == std::vector<std::string>{"a/b/c/z.ipynb", "a/x.ipynb", "b/y.ipynb"});
  CHECK(listing.warnings.empty());
}

TEST_CASE("discover_notebooks edge cases") {
  SUBCASE("no notebooks") {
    TempDir dir;
    write_file(dir.path() / "readme.md", "x");
    CHECK(discover_notebooks(dir.path()).paths.empty());
  }
  SUBCASE("nested only") {
    TempDir dir;
    write_file(dir.path() / "a/b/c/z.ipynb", "{}");
    CHECK(discover_notebooks(dir.path()).paths == std::vector<std::string>{"a/b/c/z.ipynb"});
  }
  SUBCASE("missing root is fatal") {
    CHECK_THROWS_AS(discover_notebooks("/nonexistent/nbdup/root"), Error);
  }
  SUBCASE("symlinks are not followed") {
    TempDir dir;
    TempDir other;
    write_file(other.path() / "elsewhere.ipynb", "{}");
    write_file(dir.path() / "real.ipynb", "{}");
    std::filesystem::create_directory_symlink(other.path(), dir.path() / "linked_dir");
    std::filesystem::create_symlink(dir.path() / "real.ipynb", dir.path() / "alias.ipynb");
    CHECK(discover_notebooks(dir.path()).paths == std::vector<std::string>{"real.ipynb"});
  }
}

TEST_CASE("modern format keeps code cells only, indexed from zero") {
  const auto nb = parse_notebook(fixtures_dir() / "notebooks", "v4_basic.ipynb", "r");
  REQUIRE(nb.cells.size() == 2);
  CHECK(nb.cells[0].ref.cell_index == 0);
  CHECK(nb.cells[1].ref.cell_index == 1);
  CHECK(nb.cells[0].source == "import os\nprint(os.getcwd())\n");
  CHECK(nb.cells[1].source == "x = 1");
  CHECK(nb.cells[0].ref.notebook_path == "v4_basic.ipynb");
  CHECK(nb.language == "python");
  CHECK_FALSE(nb.language_defaulted);
}

TEST_CASE("legacy worksheets carry input fields joined verbatim") {
  const auto nb = parse_notebook(fixtures_dir() / "notebooks", "v3_legacy.ipynb", "r");
  REQUIRE(nb.cells.size() == 3);
  CHECK(nb.cells[0].source == "a=1\nb=2");
  CHECK(nb.cells[1].source == "print(a + b)");
  CHECK(nb.cells[2].source.empty());
  CHECK(nb.cells[2].ref.cell_index == 2);
  CHECK(nb.language_defaulted);
  CHECK(nb.language == "python");
}

TEST_CASE("inline legacy example") {
  const auto nb = parse_notebook_text(
      R"({"nbformat":3,"worksheets":[{"cells":[{"cell_type":"code","input":["a=1\n","b=2"]}]}]})",
      "r", "n.ipynb");
  REQUIRE(nb.cells.size() == 1);
  CHECK(nb.cells[0].source == "a=1\nb=2");
}

TEST_CASE("language comes from kernel metadata") {
  const auto nb = parse_notebook(fixtures_dir() / "notebooks", "r_kernel.ipynb", "r");
  CHECK(nb.language == "r");
  CHECK(nb.cells.at(0).language_hint == std::optional<std::string>("r"));
  const auto info = parse_notebook_text(
      R"({"metadata":{"language_info":{"name":"Julia"}},"cells":[]})", "r", "j.ipynb");
  CHECK(info.language == "julia");
}

TEST_CASE("malformed notebooks raise a per-file error") {
  CHECK_THROWS_AS(parse_notebook(fixtures_dir() / "notebooks", "corrupt.ipynb", "r"),
                  NotebookParseError);
  CHECK_THROWS_AS(parse_notebook_text("[1,2]", "r", "x"), NotebookParseError);
  CHECK_THROWS_AS(parse_notebook_text(R"({"metadata":{}})", "r", "x"), NotebookParseError);
  CHECK_THROWS_AS(parse_notebook_text(R"({"cells":[{"cell_type":"code","source":[1]}]})", "r", "x"),
                  NotebookParseError);
  CHECK_THROWS_AS(parse_notebook(fixtures_dir(), "missing.ipynb", "r"), NotebookParseError);
}

TEST_CASE("cell counts match an independent structural walk") {
  for (const char* name : {"v4_basic.ipynb", "v3_legacy.ipynb", "r_kernel.ipynb",
                           "no_metadata.ipynb"}) {
    CAPTURE(name);
    const auto nb = parse_notebook(fixtures_dir() / "notebooks", name, "r");
    CHECK(nb.cells.size() == count_code_cells(fixtures_dir() / "notebooks" / name));
  }
  for (const char* name : {"analysis.ipynb", "exploration/copy_of_analysis.ipynb",
                           "models/final.ipynb"}) {
    const auto nb = parse_notebook(fixtures_dir() / "repo_planted", name, "r");
    CHECK(nb.cells.size() == count_code_cells(fixtures_dir() / "repo_planted" / name));
  }
}

TEST_CASE("parsing is deterministic and byte preserving") {
  const std::string src = "x\t=  1   \r\n# \xC3\xA9t\xC3\xA9\n\n  ";
  nlohmann::json doc = {{"cells", {{{"cell_type", "code"}, {"source", src}}}}};
  const auto text = doc.dump();
  const auto first = parse_notebook_text(text, "r", "p");
  const auto second = parse_notebook_text(text, "r", "p");
  REQUIRE(first.cells.size() == 1);
  CHECK(first.cells[0].source == src);
  CHECK(second.cells[0].source == first.cells[0].source);
}
