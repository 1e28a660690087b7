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

#include "nbdup/report_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nbdup/error.hpp"

namespace nbdup {
namespace {

using Json = nlohmann::ordered_json;

// Fixed descriptions of method choices; emitted with every report, ignored
// when reading one back.
Json method_notes() {
  Json notes;
  notes["log_base"] =
      "log base is configurable; 10 is the default because natural logs make the "
      "denominator so large that very distant cells pass the cutoff";
  notes["log_clamp"] = "log terms whose argument is <= 1 contribute 0";
  notes["length_basis"] = "avglen and avgloc are measured on normalized text";
  notes["normalization"] =
      "line comments stripped with line-local quote tracking; block comments and "
      "docstrings are kept; notebook magic lines (% and !) are kept as code";
  notes["type2_separator"] =
      "type2 means the identifier-abstracted texts are equal (all non-keyword identifiers "
      "share one placeholder); an approximation of consistent renaming";
  notes["duplicated_cells"] = "sum over clone classes of (size - 1); members_ratio counts "
                              "every cell in a clone class";
  notes["statistics"] = "median averages the middle pair for even counts; stddev is the "
                        "population standard deviation";
  notes["ld_distribution"] = "corpus LD statistics pool duplicate pairs of included repositories";
  return notes;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// --- config ---------------------------------------------------------------

Json config_json(const AnalysisConfig& c) {
  Json j;
  j["lambda1"] = c.scoring.lambda1;
  j["lambda2"] = c.scoring.lambda2;
  j["log_base"] = c.scoring.log_base;
  j["dr_threshold"] = c.scoring.dr_threshold;
  j["diagnostic_max_dr"] = c.scoring.diagnostic_max_dr;
  j["min_cells"] = c.min_cells;
  j["max_cell_chars"] = c.max_cell_chars;
  j["pruning"] = c.pruning;
  Json markers = Json::object();
  for (const auto& [lang, marker] : c.comment_rules.markers) markers[lang] = marker;
  j["comment_rules"] = {{"fallback", c.comment_rules.fallback}, {"markers", markers}};
  Json by_language = Json::object();
  for (const auto& [lang, words] : c.keywords.by_language) {
    by_language[lang] = Json(std::vector<std::string>(words.begin(), words.end()));
  }
  Json keywords;
  keywords["by_language"] = by_language;
  if (c.keywords.override_set) {
    keywords["override"] = std::vector<std::string>(c.keywords.override_set->begin(),
                                                    c.keywords.override_set->end());
  } else {
    keywords["override"] = nullptr;
  }
  j["keywords"] = keywords;
  return j;
}

KeywordSet keyword_set(const Json& j) {
  KeywordSet out;
  for (const auto& w : j) out.insert(w.get<std::string>());
  return out;
}

AnalysisConfig config_from(const Json& j) {
  AnalysisConfig c;
  c.scoring.lambda1 = j.at("lambda1").get<double>();
  c.scoring.lambda2 = j.at("lambda2").get<double>();
  c.scoring.log_base = j.at("log_base").get<double>();
  c.scoring.dr_threshold = j.at("dr_threshold").get<double>();
  c.scoring.diagnostic_max_dr = j.at("diagnostic_max_dr").get<double>();
  c.min_cells = j.at("min_cells").get<std::size_t>();
  c.max_cell_chars = j.at("max_cell_chars").get<std::size_t>();
  c.pruning = j.value("pruning", true);
  if (auto it = j.find("comment_rules"); it != j.end()) {
    c.comment_rules.fallback = it->at("fallback").get<std::string>();
    c.comment_rules.markers.clear();
    for (const auto& [lang, marker] : it->at("markers").items()) {
      c.comment_rules.markers[lang] = marker.get<std::string>();
    }
  }
  if (auto it = j.find("keywords"); it != j.end()) {
    c.keywords.by_language.clear();
    for (const auto& [lang, words] : it->at("by_language").items()) {
      c.keywords.by_language[lang] = keyword_set(words);
    }
    if (const auto& o = it->at("override"); !o.is_null()) {
      c.keywords.override_set = keyword_set(o);
    }
  }
  c.validate();
  return c;
}

// --- shared pieces ----------------------------------------------------------

Json summary_json(const Summary& s) {
  return Json{{"count", s.count}, {"min", s.min},       {"median", s.median},
              {"mean", s.mean},   {"stddev", s.stddev}, {"max", s.max}};
}

Summary summary_from(const Json& j) {
  Summary s;
  s.count = j.at("count").get<std::size_t>();
  s.min = j.at("min").get<double>();
  s.median = j.at("median").get<double>();
  s.mean = j.at("mean").get<double>();
  s.stddev = j.at("stddev").get<double>();
  s.max = j.at("max").get<double>();
  return s;
}

Json ref_json(const CellRef& r) { return Json{{"notebook", r.notebook_path}, {"cell", r.cell_index}}; }

CellRef ref_from(const Json& j, const std::string& repo_id) {
  return CellRef{repo_id, j.at("notebook").get<std::string>(), j.at("cell").get<std::size_t>()};
}

void check_schema(const Json& j, std::string_view kind) {
  if (!j.is_object() || j.value("nbdup_schema", 0) != kSchemaVersion) {
    throw Error("unsupported report schema (expected nbdup_schema " +
                std::to_string(kSchemaVersion) + ")");
  }
  if (j.value("kind", std::string()) != kind) {
    throw Error("expected a " + std::string(kind) + " report");
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

// Wraps nlohmann's type/key errors as library errors.
template <typename Fn>
auto reading(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

Json summary_row_json(const RepositorySummary& s) {
  Json j;
  j["repo_id"] = s.repo_id;
  j["notebook_count"] = s.notebook_count;
  j["unparseable_count"] = s.unparseable_count;
  j["total_code_cells"] = s.total_code_cells;
  j["duplicate_pair_count"] = s.duplicate_pair_count;
  j["type1"] = s.type1;
  j["type2"] = s.type2;
  j["type3"] = s.type3;
  j["duplicated_cell_count"] = s.duplicated_cell_count;
  j["duplicates_ratio"] = s.duplicates_ratio;
  j["members_ratio"] = s.members_ratio;
  j["included"] = s.included;
  j["error"] = s.error ? Json(*s.error) : Json(nullptr);
  return j;
}

RepositorySummary summary_row_from(const Json& j) {
  RepositorySummary s;
  s.repo_id = j.at("repo_id").get<std::string>();
  s.notebook_count = j.at("notebook_count").get<std::size_t>();
  s.unparseable_count = j.at("unparseable_count").get<std::size_t>();
  s.total_code_cells = j.at("total_code_cells").get<std::size_t>();
  s.duplicate_pair_count = j.at("duplicate_pair_count").get<std::size_t>();
  s.type1 = j.at("type1").get<std::size_t>();
  s.type2 = j.at("type2").get<std::size_t>();
  s.type3 = j.at("type3").get<std::size_t>();
  s.duplicated_cell_count = j.at("duplicated_cell_count").get<std::size_t>();
  s.duplicates_ratio = j.at("duplicates_ratio").get<double>();
  s.members_ratio = j.at("members_ratio").get<double>();
  s.included = j.at("included").get<bool>();
  if (const auto& e = j.at("error"); !e.is_null()) s.error = e.get<std::string>();
  return s;
}

std::string csv_row(const RepositorySummary& s) {
  std::ostringstream out;
  out << csv_field(s.repo_id) << ',' << s.notebook_count << ',' << s.total_code_cells << ','
      << s.duplicate_pair_count << ',' << s.type1 << ',' << s.type2 << ',' << s.type3 << ','
      << s.duplicated_cell_count << ',' << format_double(s.duplicates_ratio) << ','
      << format_double(s.members_ratio) << '\n';
  return out.str();
}

void text_summary(std::ostream& out, const char* label, const Summary& s) {
  out << label << ": n=" << s.count << " min=" << format_double(s.min)
      << " median=" << format_double(s.median) << " mean=" << format_double(s.mean)
      << " stddev=" << format_double(s.stddev) << " max=" << format_double(s.max) << '\n';
}

void text_config(std::ostream& out, const AnalysisConfig& c) {
  out << "config: lambda1=" << format_double(c.scoring.lambda1)
      << " lambda2=" << format_double(c.scoring.lambda2)
      << " log_base=" << format_double(c.scoring.log_base)
      << " threshold=" << format_double(c.scoring.dr_threshold)
      << " max_dr=" << format_double(c.scoring.diagnostic_max_dr)
      << " min_cells=" << c.min_cells << " pruning=" << (c.pruning ? "on" : "off") << '\n';
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw ConfigError("unknown report format '" + std::string(name) + "'");
}

std::string config_to_json(const AnalysisConfig& config) { return config_json(config).dump(2); }

AnalysisConfig config_from_json(std::string_view text) {
  const Json j = parse_json(text);
  return reading([&] {
    if (auto it = j.find("effective_config"); it != j.end()) return config_from(*it);
    return config_from(j);
  });
}

AnalysisConfig load_config_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return config_from_json(buf.str());
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(file.string() + ": " + e.what());
  }
}

std::string to_json(const RepositoryReport& r) {
  Json j;
  j["nbdup_schema"] = kSchemaVersion;
  j["kind"] = "repository";
  j["repo_id"] = r.repo_id;
  j["notebook_count"] = r.notebook_count;
  j["unparseable_count"] = r.unparseable_count;
  j["unparseable_notebooks"] = r.unparseable_notebooks;
  j["total_code_cells"] = r.total_code_cells;
  j["empty_cells_excluded"] = r.empty_cells_excluded;
  j["truncated_cells"] = r.truncated_cells;
  j["language_defaulted_notebooks"] = r.language_defaulted_notebooks;
  j["candidate_pairs"] = r.candidate_pairs;
  j["pruned_pairs"] = r.pruned_pairs;
  j["scored_pairs"] = r.scored_pairs;
  j["duplicated_cell_count"] = r.duplicated_cell_count;
  j["duplicates_ratio"] = r.duplicates_ratio;
  j["member_cell_count"] = r.member_cell_count;
  j["members_ratio"] = r.members_ratio;
  j["clone_type_counts"] = {{"type1", r.type_count(CloneType::Type1)},
                            {"type2", r.type_count(CloneType::Type2)},
                            {"type3", r.type_count(CloneType::Type3)}};
  j["ld_stats"] = summary_json(r.ld_stats);

  Json bands = Json::array();
  for (std::size_t b = 0; b < kDecileBands; ++b) {
    bands.push_back({{"lower", static_cast<double>(b) / 10.0},
                     {"upper", static_cast<double>(b + 1) / 10.0},
                     {"count", r.dr_band_histogram[b]}});
  }
  j["dr_band_histogram"] = {{"bands", bands}, {"overflow", r.dr_overflow_count}};

  Json pairs = Json::array();
  for (const auto& p : r.duplicate_pairs) {
    pairs.push_back({{"a", ref_json(p.a)},
                     {"b", ref_json(p.b)},
                     {"ld", p.ld},
                     {"dr", p.dr},
                     {"clone_type", std::string(to_string(p.clone_type))}});
  }
  j["duplicate_pairs"] = pairs;

  Json classes = Json::array();
  for (const auto& c : r.clone_classes) {
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(ref_json(m));
    classes.push_back({{"representative", ref_json(c.representative())}, {"members", members}});
  }
  j["clone_classes"] = classes;
  j["warnings"] = r.warnings;
  j["effective_config"] = config_json(r.effective_config);
  j["method_notes"] = method_notes();
  return j.dump(2) + "\n";
}

RepositoryReport repository_report_from_json(std::string_view text) {
  const Json j = parse_json(text);
  check_schema(j, "repository");
  return reading([&] {
    RepositoryReport r;
    r.repo_id = j.at("repo_id").get<std::string>();
    r.notebook_count = j.at("notebook_count").get<std::size_t>();
    r.unparseable_count = j.at("unparseable_count").get<std::size_t>();
    r.unparseable_notebooks = j.at("unparseable_notebooks").get<std::vector<std::string>>();
    r.total_code_cells = j.at("total_code_cells").get<std::size_t>();
    r.empty_cells_excluded = j.at("empty_cells_excluded").get<std::size_t>();
    r.truncated_cells = j.at("truncated_cells").get<std::size_t>();
    r.language_defaulted_notebooks = j.at("language_defaulted_notebooks").get<std::size_t>();
    r.candidate_pairs = j.at("candidate_pairs").get<std::size_t>();
    r.pruned_pairs = j.at("pruned_pairs").get<std::size_t>();
    r.scored_pairs = j.at("scored_pairs").get<std::size_t>();
    r.duplicated_cell_count = j.at("duplicated_cell_count").get<std::size_t>();
    r.duplicates_ratio = j.at("duplicates_ratio").get<double>();
    r.member_cell_count = j.at("member_cell_count").get<std::size_t>();
    r.members_ratio = j.at("members_ratio").get<double>();
    r.ld_stats = summary_from(j.at("ld_stats"));

    const auto& hist = j.at("dr_band_histogram");
    const auto& bands = hist.at("bands");
    if (bands.size() != kDecileBands) throw Error("histogram must have ten bands");
    for (std::size_t b = 0; b < kDecileBands; ++b) {
      r.dr_band_histogram[b] = bands[b].at("count").get<std::size_t>();
    }
    r.dr_overflow_count = hist.at("overflow").get<std::size_t>();

    for (const auto& p : j.at("duplicate_pairs")) {
      r.duplicate_pairs.push_back(DuplicatePair{
          ref_from(p.at("a"), r.repo_id), ref_from(p.at("b"), r.repo_id),
          p.at("ld").get<std::size_t>(), p.at("dr").get<double>(),
          clone_type_from_string(p.at("clone_type").get<std::string>())});
    }
    for (const auto& c : j.at("clone_classes")) {
      CloneClass cls;
      for (const auto& m : c.at("members")) cls.members.push_back(ref_from(m, r.repo_id));
      r.clone_classes.push_back(std::move(cls));
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.effective_config = config_from(j.at("effective_config"));
    return r;
  });
}

std::string to_json(const CorpusReport& c) {
  Json j;
  j["nbdup_schema"] = kSchemaVersion;
  j["kind"] = "corpus";
  j["included_repo_count"] = c.included_repo_count;
  j["excluded_small_repo_count"] = c.excluded_small_repo_count;
  j["failed_repo_count"] = c.failed_repo_count;
  j["ratio_stats"] = summary_json(c.ratio_stats);
  j["ld_distribution_stats"] = summary_json(c.ld_distribution_stats);
  j["clone_type_breakdown"] = {{"type1", c.clone_type_breakdown.type1},
                               {"type2", c.clone_type_breakdown.type2},
                               {"type3", c.clone_type_breakdown.type3}};
  Json rows = Json::array();
  for (const auto& s : c.repo_reports) rows.push_back(summary_row_json(s));
  j["repo_reports"] = rows;
  j["warnings"] = c.warnings;
  j["effective_config"] = config_json(c.effective_config);
  j["method_notes"] = method_notes();
  return j.dump(2) + "\n";
}

CorpusReport corpus_report_from_json(std::string_view text) {
  const Json j = parse_json(text);
  check_schema(j, "corpus");
  return reading([&] {
    CorpusReport c;
    c.included_repo_count = j.at("included_repo_count").get<std::size_t>();
    c.excluded_small_repo_count = j.at("excluded_small_repo_count").get<std::size_t>();
    c.failed_repo_count = j.at("failed_repo_count").get<std::size_t>();
    c.ratio_stats = summary_from(j.at("ratio_stats"));
    c.ld_distribution_stats = summary_from(j.at("ld_distribution_stats"));
    const auto& b = j.at("clone_type_breakdown");
    c.clone_type_breakdown = {b.at("type1").get<std::size_t>(), b.at("type2").get<std::size_t>(),
                              b.at("type3").get<std::size_t>()};
    for (const auto& row : j.at("repo_reports")) c.repo_reports.push_back(summary_row_from(row));
    c.warnings = j.at("warnings").get<std::vector<std::string>>();
    c.effective_config = config_from(j.at("effective_config"));
    return c;
  });
}

std::string to_csv(const RepositoryReport& report) {
  return std::string(kCsvHeader) + "\n" + csv_row(summarize_repository(report));
}

std::string to_csv(const CorpusReport& report) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : report.repo_reports) out += csv_row(row);
  return out;
}

std::string to_text(const RepositoryReport& r) {
  std::ostringstream out;
  out << "repository " << r.repo_id << '\n'
      << "  notebooks: " << r.notebook_count << " (" << r.unparseable_count << " unparseable)\n"
      << "  code cells: " << r.total_code_cells << " (" << r.empty_cells_excluded
      << " empty excluded)\n"
      << "  pairs: " << r.candidate_pairs << " candidates, " << r.pruned_pairs << " pruned, "
      << r.scored_pairs << " with DR <= max\n"
      << "  duplicate pairs: " << r.duplicate_pairs.size()
      << " (type1 " << r.type_count(CloneType::Type1) << ", type2 "
      << r.type_count(CloneType::Type2) << ", type3 " << r.type_count(CloneType::Type3) << ")\n"
      << "  clone classes: " << r.clone_classes.size() << '\n'
      << "  duplicated cells: " << r.duplicated_cell_count
      << "  ratio: " << format_double(r.duplicates_ratio)
      << "  members ratio: " << format_double(r.members_ratio) << '\n';
  out << "  ";
  text_summary(out, "LD", r.ld_stats);
  out << "  DR bands:";
  for (std::size_t b = 0; b < kDecileBands; ++b) out << ' ' << r.dr_band_histogram[b];
  out << " | >1.0: " << r.dr_overflow_count << '\n';
  for (const auto& c : r.clone_classes) {
    out << "  class of " << c.members.size() << ":";
    for (const auto& m : c.members) out << ' ' << m.notebook_path << '#' << m.cell_index;
    out << '\n';
  }
  for (const auto& w : r.warnings) out << "  warning: " << w << '\n';
  out << "  ";
  text_config(out, r.effective_config);
  return out.str();
}

std::string to_text(const CorpusReport& c) {
  std::ostringstream out;
  out << "corpus: " << c.repo_reports.size() << " repositories, " << c.included_repo_count
      << " included, " << c.excluded_small_repo_count << " below " << c.effective_config.min_cells
      << " cells, " << c.failed_repo_count << " failed\n";
  text_summary(out, "duplicates ratio", c.ratio_stats);
  text_summary(out, "LD", c.ld_distribution_stats);
  out << "clone types: type1 " << c.clone_type_breakdown.type1 << ", type2 "
      << c.clone_type_breakdown.type2 << ", type3 " << c.clone_type_breakdown.type3 << '\n';
  for (const auto& s : c.repo_reports) {
    out << "  " << s.repo_id << ": cells " << s.total_code_cells << ", ratio "
        << format_double(s.duplicates_ratio) << (s.included ? "" : " (excluded)");
    if (s.error) out << " error: " << *s.error;
    out << '\n';
  }
  for (const auto& w : c.warnings) out << "warning: " << w << '\n';
  text_config(out, c.effective_config);
  return out.str();
}

std::string render(const RepositoryReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return to_json(report);
    case ReportFormat::Csv: return to_csv(report);
    case ReportFormat::Text: return to_text(report);
  }
  return to_json(report);
}

std::string render(const CorpusReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return to_json(report);
    case ReportFormat::Csv: return to_csv(report);
    case ReportFormat::Text: return to_text(report);
  }
  return to_json(report);
}

}  // namespace nbdup
