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

#include "nbdup/normalize.hpp"

#include <fstream>

#include "nbdup/error.hpp"
#include "nbdup/utf8.hpp"

namespace nbdup {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool ascii_ident_start(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

// Non-ASCII letters are accepted in identifiers (python 3, julia, R all do).
// Without a Unicode database we approximate "letter" as any non-ASCII scalar
// outside the Latin-1 symbol range, the general punctuation block, spaces and
// the replacement character; U+00B5 is explicitly a letter.
bool unicode_ident_char(char32_t c) {
  if (c < 0x80) return false;
  if (c == 0xB5) return true;
  if (c < 0xC0) return false;
  if (c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x206F) return false;
  if (c >= 0x2190 && c <= 0x2BFF) return false;  // arrows, math, box drawing
  if (c == 0x3000 || c == 0xFEFF || c == 0xFFFD) return false;
  return true;
}

bool ident_start(char32_t c) { return ascii_ident_start(c) || unicode_ident_char(c); }

bool ident_continue(char32_t c) { return ident_start(c) || (c >= '0' && c <= '9'); }

KeywordSet make_set(std::initializer_list<const char*> words) {
  KeywordSet out;
  for (const char* w : words) out.emplace(w);
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot read config file '" + file.string() + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    lines.emplace_back(trim(line));
  }
  return lines;
}

}  // namespace

KeywordSet python_keywords() {
  return make_set({"False", "None", "True", "and", "as", "assert", "async", "await",
                   "break", "class", "continue", "def", "del", "elif", "else", "except",
                   "finally", "for", "from", "global", "if", "import", "in", "is",
                   "lambda", "nonlocal", "not", "or", "pass", "raise", "return", "try",
                   "while", "with", "yield"});
}

KeywordSet r_keywords() {
  return make_set({"if", "else", "repeat", "while", "function", "for", "in", "next",
                   "break", "TRUE", "FALSE", "NULL", "Inf", "NaN", "NA", "NA_integer_",
                   "NA_real_", "NA_character_", "NA_complex_"});
}

KeywordSet javascript_keywords() {
  return make_set({"await", "break", "case", "catch", "class", "const", "continue",
                   "debugger", "default", "delete", "do", "else", "export", "extends",
                   "false", "finally", "for", "function", "if", "import", "in",
                   "instanceof", "let", "new", "null", "return", "super", "switch", "this",
                   "throw", "true", "try", "typeof", "undefined", "var", "void", "while",
                   "with", "yield"});
}

CommentRules CommentRules::defaults() {
  CommentRules rules;
  rules.markers = {{"python", "#"}, {"r", "#"},          {"julia", "#"},
                   {"javascript", "//"}, {"c++", "//"}, {"typescript", "//"}};
  rules.fallback = "#";
  return rules;
}

CommentRules CommentRules::load(const std::filesystem::path& file) {
  CommentRules rules = defaults();
  for (const auto& line : read_lines(file)) {
    if (line.empty()) continue;
    const auto split = line.find_first_of(" \t");
    if (split == std::string::npos) {
      throw ConfigError("comment rule '" + line + "' needs a language and a marker");
    }
    const std::string language(trim(std::string_view(line).substr(0, split)));
    const std::string marker(trim(std::string_view(line).substr(split)));
    if (language == "default") {
      rules.fallback = marker;
    } else {
      rules.markers[language] = marker;
    }
  }
  return rules;
}

std::string_view CommentRules::marker_for(std::string_view language) const {
  if (auto it = markers.find(language); it != markers.end()) return it->second;
  return fallback;
}

KeywordTable KeywordTable::defaults() {
  KeywordTable table;
  table.by_language = {{"python", python_keywords()},
                       {"r", r_keywords()},
                       {"javascript", javascript_keywords()}};
  return table;
}

KeywordSet KeywordTable::load(const std::filesystem::path& file) {
  KeywordSet out;
  for (auto& line : read_lines(file)) {
    if (!line.empty()) out.insert(std::move(line));
  }
  return out;
}

const KeywordSet& KeywordTable::for_language(std::string_view language) const {
  if (override_set) return *override_set;
  if (auto it = by_language.find(language); it != by_language.end()) return it->second;
  static const KeywordSet fallback = python_keywords();
  if (auto it = by_language.find("python"); it != by_language.end()) return it->second;
  return fallback;
}

std::string_view strip_line_comment(std::string_view line, std::string_view marker) {
  if (marker.empty()) return line;
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quote) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
    } else if (c == '"' || c == '\'' || c == '`') {
      quote = c;
    } else if (line.compare(i, marker.size(), marker) == 0) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::optional<NormalizedCell> normalize_cell(const CodeCell& cell, const CommentRules& rules) {
  const std::string language = cell.language_hint.value_or(std::string(kDefaultLanguage));
  const std::string_view marker = rules.marker_for(language);

  std::string text;
  std::size_t loc = 0;
  std::string_view rest = cell.source;
  while (true) {
    const auto nl = rest.find('\n');
    const std::string_view line = trim(strip_line_comment(rest.substr(0, nl), marker));
    if (!line.empty()) {
      if (loc > 0) text.push_back('\n');
      text.append(line);
      ++loc;
    }
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  if (loc == 0) return std::nullopt;

  NormalizedCell out;
  out.ref = cell.ref;
  out.char_count = utf8::length(text);
  out.text = std::move(text);
  out.loc = loc;
  out.language = language;
  return out;
}

std::string abstract_identifiers(std::string_view text, const KeywordSet& keywords) {
  const std::u32string chars = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < chars.size()) {
    const char32_t c = chars[i];
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < chars.size() && ident_continue(chars[j])) ++j;
      const std::string token = utf8::encode(std::u32string_view(chars).substr(i, j - i));
      if (keywords.contains(token)) {
        out += token;
      } else {
        out += kIdentifierPlaceholder;
      }
      i = j;
    } else if (c >= '0' && c <= '9') {
      // Numeric literals keep trailing letters (1e5, 0x1F, 10L) out of the
      // identifier rule.
      std::size_t j = i + 1;
      while (j < chars.size() && ident_continue(chars[j])) ++j;
      out += utf8::encode(std::u32string_view(chars).substr(i, j - i));
      i = j;
    } else {
      out += utf8::encode(std::u32string_view(&chars[i], 1));
      ++i;
    }
  }
  return out;
}

}  // namespace nbdup
