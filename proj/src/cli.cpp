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

#include "nbdup/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbdup/corpus_stats.hpp"
#include "nbdup/edit_distance.hpp"
#include "nbdup/error.hpp"
#include "nbdup/report_io.hpp"
#include "nbdup/scan_pipeline.hpp"

namespace nbdup {
namespace {

namespace fs = std::filesystem;

// Raw flag values shared by every subcommand.
struct Flags {
  double threshold = 0.3;
  double lambda1 = 6.0;
  double lambda2 = 8.0;
  double log_base = 10.0;
  std::size_t min_cells = kDefaultMinCells;
  double max_dr = 1.0;
  std::size_t max_cell_chars = kDefaultMaxCellChars;
  std::string format = "text";
  std::size_t jobs = default_worker_count();
  std::string keywords_file;
  std::string comment_rules_file;
  std::string config_file;
  std::string out_file;
  std::string language = std::string(kDefaultLanguage);
  bool no_prune = false;

  CLI::Option* threshold_opt = nullptr;
  CLI::Option* lambda1_opt = nullptr;
  CLI::Option* lambda2_opt = nullptr;
  CLI::Option* log_base_opt = nullptr;
  CLI::Option* min_cells_opt = nullptr;
  CLI::Option* max_dr_opt = nullptr;
  CLI::Option* max_cell_chars_opt = nullptr;
};

void add_common_flags(CLI::App& cmd, Flags& f) {
  f.threshold_opt = cmd.add_option("--threshold", f.threshold, "Duplicate cutoff on DR (0.3)");
  f.lambda1_opt = cmd.add_option("--lambda1", f.lambda1, "Weight of the length term (6)");
  f.lambda2_opt = cmd.add_option("--lambda2", f.lambda2, "Weight of the lines-of-code term (8)");
  f.log_base_opt = cmd.add_option("--log-base", f.log_base, "Logarithm base (10)");
  f.min_cells_opt =
      cmd.add_option("--min-cells", f.min_cells, "Minimum code cells for corpus statistics (28)");
  f.max_dr_opt =
      cmd.add_option("--max-dr", f.max_dr, "Upper DR limit of the calibration histogram (1.0)");
  f.max_cell_chars_opt = cmd.add_option("--max-cell-chars", f.max_cell_chars,
                                        "Truncate longer normalized cells (100000)");
  cmd.add_option("--format", f.format, "Report format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd.add_option("--jobs", f.jobs, "Worker threads (logical CPU count)")
      ->envname("NBDUP_JOBS")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--keywords", f.keywords_file, "Keyword list file, one per line")
      ->check(CLI::ExistingFile);
  cmd.add_option("--comment-rules", f.comment_rules_file,
                 "Comment marker file, '<language> <marker>' per line")
      ->check(CLI::ExistingFile);
  cmd.add_option("--config", f.config_file,
                 "JSON config (or a previous report) to start from; flags override it")
      ->check(CLI::ExistingFile);
  cmd.add_option("--out", f.out_file, "Write the report here instead of stdout");
  cmd.add_flag("--no-prune", f.no_prune,
               "Compute every distance in full (same results, slower)");
}

AnalysisConfig resolve_config(const Flags& f) {
  AnalysisConfig c = f.config_file.empty() ? AnalysisConfig{} : load_config_file(f.config_file);
  if (f.config_file.empty() || f.threshold_opt->count()) c.scoring.dr_threshold = f.threshold;
  if (f.config_file.empty() || f.lambda1_opt->count()) c.scoring.lambda1 = f.lambda1;
  if (f.config_file.empty() || f.lambda2_opt->count()) c.scoring.lambda2 = f.lambda2;
  if (f.config_file.empty() || f.log_base_opt->count()) c.scoring.log_base = f.log_base;
  if (f.config_file.empty() || f.max_dr_opt->count()) c.scoring.diagnostic_max_dr = f.max_dr;
  if (f.config_file.empty() || f.min_cells_opt->count()) c.min_cells = f.min_cells;
  if (f.config_file.empty() || f.max_cell_chars_opt->count()) c.max_cell_chars = f.max_cell_chars;
  if (!f.comment_rules_file.empty()) c.comment_rules = CommentRules::load(f.comment_rules_file);
  if (!f.keywords_file.empty()) c.keywords.override_set = KeywordTable::load(f.keywords_file);
  if (f.no_prune) c.pruning = false;
  c.validate();
  return c;
}

int emit(const std::string& text, const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.out_file.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(f.out_file, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << f.out_file << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

std::vector<std::pair<std::string, fs::path>> corpus_members(const fs::path& input) {
  std::vector<std::pair<std::string, fs::path>> repos;
  std::error_code ec;
  if (fs::is_directory(input, ec)) {
    for (const auto& entry : fs::directory_iterator(input, ec)) {
      std::error_code entry_ec;
      if (entry.is_directory(entry_ec) && !entry.is_symlink(entry_ec)) {
        repos.emplace_back(entry.path().filename().generic_string(), entry.path());
      }
    }
    if (ec) throw Error("cannot read corpus root '" + input.string() + "': " + ec.message());
  } else if (fs::is_regular_file(input, ec)) {
    std::ifstream in(input);
    if (!in) throw Error("cannot read repository list '" + input.string() + "'");
    for (std::string line; std::getline(in, line);) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      repos.emplace_back(repo_id_for(line), fs::path(line));
    }
  } else {
    throw Error("corpus input '" + input.string() + "' is neither a directory nor a list file");
  }
  std::sort(repos.begin(), repos.end());
  return repos;
}

int cmd_scan(const std::string& repo, const Flags& f, std::ostream& out, std::ostream& err) {
  ScanConfig cfg{resolve_config(f), f.jobs};
  const RepositoryReport report = scan_repository(repo, cfg);
  return emit(render(report, report_format_from_string(f.format)), f, out, err);
}

int cmd_corpus(const std::string& input, const Flags& f, std::ostream& out, std::ostream& err) {
  ScanConfig cfg{resolve_config(f), f.jobs};
  std::vector<RepositoryReport> reports;
  std::vector<RepositorySummary> failures;
  for (const auto& [id, path] : corpus_members(input)) {
    try {
      reports.push_back(scan_repository(path, cfg, id));
    } catch (const Error& e) {
      err << "warning: " << id << ": " << e.what() << '\n';
      RepositorySummary row;
      row.repo_id = id;
      row.error = e.what();
      failures.push_back(std::move(row));
    }
  }
  const CorpusReport corpus = aggregate(reports, cfg.analysis, failures);
  for (const auto& w : corpus.warnings) err << "warning: " << w << '\n';
  return emit(render(corpus, report_format_from_string(f.format)), f, out, err);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_pair(const std::string& file_a, const std::string& file_b, const Flags& f,
             std::ostream& out, std::ostream& err) {
  const AnalysisConfig cfg = resolve_config(f);
  auto load = [&](const std::string& file, std::size_t index) {
    CodeCell cell{CellRef{"pair", file, index}, read_file(file), f.language};
    return normalize_cell(cell, cfg.comment_rules);
  };
  const auto a = load(file_a, 0);
  const auto b = load(file_b, 1);
  if (!a || !b) {
    err << "error: " << (!a ? file_a : file_b) << " has no code after normalization\n";
    return kExitFailure;
  }

  const ScoringConfig& sc = cfg.scoring;
  const std::size_t ld = levenshtein(a->text, b->text);
  const DenominatorTerms terms = denominator_terms(a->char_count, b->char_count, a->loc, b->loc, sc);
  const double dr = ratio_from_distance(ld, terms.total());
  const KeywordSet& keywords = cfg.keywords.for_language(f.language);
  const CloneType type =
      classify(ld, abstract_identifiers(a->text, keywords), abstract_identifiers(b->text, keywords));
  const bool duplicate = dr <= sc.dr_threshold;

  std::ostringstream o;
  if (f.format == "json") {
    nlohmann::ordered_json j;
    j["nbdup_schema"] = kSchemaVersion;
    j["kind"] = "pair";
    j["a"] = {{"file", file_a}, {"text", a->text}, {"chars", a->char_count}, {"loc", a->loc}};
    j["b"] = {{"file", file_b}, {"text", b->text}, {"chars", b->char_count}, {"loc", b->loc}};
    j["ld"] = ld;
    j["avglen"] = terms.avglen;
    j["avgloc"] = terms.avgloc;
    j["length_term"] = terms.length_term;
    j["loc_term"] = terms.loc_term;
    j["denominator"] = terms.total();
    j["dr"] = std::isinf(dr) ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(dr);
    j["duplicate"] = duplicate;
    j["clone_type"] = std::string(to_string(type));
    j["effective_config"] = nlohmann::ordered_json::parse(config_to_json(cfg));
    o << j.dump(2) << '\n';
  } else {
    o << "--- " << file_a << " (" << a->char_count << " chars, " << a->loc << " loc)\n"
      << a->text << "\n"
      << "--- " << file_b << " (" << b->char_count << " chars, " << b->loc << " loc)\n"
      << b->text << "\n"
      << "LD: " << ld << '\n'
      << "avglen: " << terms.avglen << "  avgloc: " << terms.avgloc << '\n'
      << "length term: " << terms.length_term << "  loc term: " << terms.loc_term << '\n'
      << "denominator: " << terms.total() << '\n'
      << "DR: " << dr << '\n'
      << "verdict: "
      << (duplicate ? "duplicate (" + std::string(to_string(type)) + ")" : "not a duplicate")
      << '\n';
  }
  return emit(o.str(), f, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Code duplication in notebook repositories", "nbdup"};
  app.require_subcommand(1);

  Flags scan_flags;
  std::string scan_repo;
  auto* scan = app.add_subcommand("scan", "Scan one repository");
  scan->add_option("repo", scan_repo, "Repository root")->required();
  add_common_flags(*scan, scan_flags);

  Flags corpus_flags;
  std::string corpus_input;
  auto* corpus = app.add_subcommand("corpus", "Scan every repository of a corpus");
  corpus->add_option("input", corpus_input,
                     "Directory whose subdirectories are repositories, or a file listing "
                     "repository paths")
      ->required();
  add_common_flags(*corpus, corpus_flags);

  Flags pair_flags;
  std::string pair_a;
  std::string pair_b;
  auto* pair = app.add_subcommand("pair", "Explain the duplicate ratio of two cell files");
  pair->add_option("file_a", pair_a, "First cell")->required();
  pair->add_option("file_b", pair_b, "Second cell")->required();
  pair->add_option("--lang", pair_flags.language, "Language of both cells (python)");
  add_common_flags(*pair, pair_flags);

  // CLI11 wants argv order reversed in a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (scan->parsed()) return cmd_scan(scan_repo, scan_flags, out, err);
    if (corpus->parsed()) return cmd_corpus(corpus_input, corpus_flags, out, err);
    if (pair->parsed()) return cmd_pair(pair_a, pair_b, pair_flags, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace nbdup
