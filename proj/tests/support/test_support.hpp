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
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace nbdup::testing {

inline std::filesystem::path fixtures_dir() { return NBDUP_FIXTURES_DIR; }

/// Temporary directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng{std::random_device{}()};
    path_ = std::filesystem::temp_directory_path() /
            ("nbdup-test-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Writes a v4 python notebook whose code cells have the given sources.
inline void write_notebook(const std::filesystem::path& path,
                           const std::vector<std::string>& sources) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& s : sources) {
    cells.push_back({{"cell_type", "code"}, {"metadata", nlohmann::json::object()},
                     {"outputs", nlohmann::json::array()}, {"execution_count", nullptr},
                     {"source", s}});
  }
  nlohmann::json doc = {
      {"nbformat", 4},
      {"nbformat_minor", 2},
      {"metadata", {{"kernelspec", {{"name", "python3"}, {"language", "python"}}}}},
      {"cells", cells}};
  write_file(path, doc.dump(1));
}

/// Deterministic pseudo-code line generator for synthetic repositories.
class CodeGenerator {
 public:
  explicit CodeGenerator(std::uint64_t seed) : rng_(seed) {}

  std::string identifier() {
    static const char* stems[] = {"df", "data", "frame", "model", "result", "values",
                                  "x", "y", "train", "test", "scores", "labels",
                                  "features", "counts", "ax", "fig", "row", "col"};
    std::uniform_int_distribution<int> pick(0, 17);
    std::uniform_int_distribution<int> suffix(0, 40);
    std::string s = stems[pick(rng_)];
    if (int k = suffix(rng_); k < 25) s += "_" + std::to_string(k);
    return s;
  }

  std::string line() {
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<int> num(0, 999);
    switch (kind(rng_)) {
      case 0: return identifier() + " = " + identifier() + ".groupby('" + identifier() + "').mean()";
      case 1: return "plt.plot(" + identifier() + ", " + identifier() + ", label='" + identifier() + "')";
      case 2: return identifier() + " = np.random.rand(" + std::to_string(num(rng_)) + ")";
      case 3: return "print(" + identifier() + "[" + std::to_string(num(rng_)) + "])";
      case 4: return "for " + identifier() + " in range(" + std::to_string(num(rng_)) + "):";
      default: return identifier() + " = pd.read_csv('" + identifier() + ".csv')";
    }
  }

  /// A cell of roughly `target_chars` characters.
  std::string cell(std::size_t target_chars) {
    std::string out;
    while (out.size() < target_chars) {
      if (!out.empty()) out += '\n';
      out += line();
    }
    return out;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nbdup::testing
