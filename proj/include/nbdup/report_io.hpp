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
#include <string>
#include <string_view>

#include "nbdup/clone_grouping.hpp"
#include "nbdup/corpus_stats.hpp"

namespace nbdup {

/// Version stamped into every JSON report as "nbdup_schema".
inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { Json, Csv, Text };

/// Throws ConfigError for names other than json, csv, text.
ReportFormat report_format_from_string(std::string_view name);

/// Canonical JSON. Cell paths are repo-relative with forward slashes.
std::string to_json(const RepositoryReport& report);
std::string to_json(const CorpusReport& report);
std::string config_to_json(const AnalysisConfig& config);

/// Inverse of to_json. Throws Error on schema mismatch or malformed input.
RepositoryReport repository_report_from_json(std::string_view text);
CorpusReport corpus_report_from_json(std::string_view text);
/// Accepts either a bare config object or any report embedding one.
AnalysisConfig config_from_json(std::string_view text);
AnalysisConfig load_config_file(const std::filesystem::path& file);

inline constexpr std::string_view kCsvHeader =
    "repo_id,notebooks,cells,pairs,type1,type2,type3,duplicated_cells,ratio,members_ratio";

/// Header plus one summary row per repository.
std::string to_csv(const RepositoryReport& report);
std::string to_csv(const CorpusReport& report);

std::string to_text(const RepositoryReport& report);
std::string to_text(const CorpusReport& report);

std::string render(const RepositoryReport& report, ReportFormat format);
std::string render(const CorpusReport& report, ReportFormat format);

}  // namespace nbdup
