/*
 * Copyright 2026 The bookbias Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bookbias/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "json.hpp"

#include "bookbias/strings.hpp"

namespace bookbias::corpus {

using nlohmann::json;

void NameCensus::add(std::string_view name, GenderLabel gender, long long frequency) {
  if (frequency < 0) throw std::invalid_argument("census frequency must be nonnegative");
  if (gender != GenderLabel::Male && gender != GenderLabel::Female)
    throw std::invalid_argument("census gender must be male or female");
  Entry& e = entries_[ascii_lower(trim_view(name))];
  if (gender == GenderLabel::Male)
    e.male += frequency;
  else
    e.female += frequency;
}

GenderLabel NameCensus::lookup(std::string_view name) const {
  auto it = entries_.find(ascii_lower(trim_view(name)));
  if (it == entries_.end()) return GenderLabel::Unknown;
  const Entry& e = it->second;
  if (e.male > e.female) return GenderLabel::Male;
  if (e.female > e.male) return GenderLabel::Female;
  return GenderLabel::Unknown;  // exact tie (or zero evidence)
}

void OccupationLexicon::add(std::string_view term, int level) {
  if (level < 1 || level > 5) throw std::invalid_argument("occupation level must be in 1..5");
  std::string key = normalize_spaces(ascii_lower(term));
  if (key.empty()) throw std::invalid_argument("occupation term must be nonempty");
  if (!levels_.emplace(key, level).second)
    throw std::invalid_argument("duplicate occupation term: " + key);
  std::size_t words = 1 + static_cast<std::size_t>(std::count(key.begin(), key.end(), ' '));
  if (words > max_words_) max_words_ = words;
}

bool OccupationLexicon::contains(std::string_view term) const {
  return levels_.find(std::string(term)) != levels_.end();
}

int OccupationLexicon::level(std::string_view term) const {
  auto it = levels_.find(std::string(term));
  if (it == levels_.end()) throw std::out_of_range("term not in occupation lexicon: " + std::string(term));
  return it->second;
}

namespace {

std::string require_string(const json& j, const char* field, const std::string& file,
                           std::size_t line) {
  if (!j.contains(field)) throw ParseError(file, line, std::string("missing field '") + field + "'");
  if (!j[field].is_string())
    throw ParseError(file, line, std::string("field '") + field + "' must be a string");
  return j[field].get<std::string>();
}

int require_int(const json& j, const char* field, const std::string& file, std::size_t line) {
  if (!j.contains(field)) throw ParseError(file, line, std::string("missing field '") + field + "'");
  if (!j[field].is_number_integer())
    throw ParseError(file, line, std::string("field '") + field + "' must be an integer");
  return j[field].get<int>();
}

bool require_bool(const json& j, const char* field, const std::string& file, std::size_t line) {
  if (!j.contains(field)) throw ParseError(file, line, std::string("missing field '") + field + "'");
  if (!j[field].is_boolean())
    throw ParseError(file, line, std::string("field '") + field + "' must be a boolean");
  return j[field].get<bool>();
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

std::vector<BookRecord> parse_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());

  const std::string file = path.string();
  std::vector<BookRecord> records;
  std::unordered_map<std::string, std::size_t> id_lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(file, lineno, std::string("malformed record: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(file, lineno, "record must be an object");

    BookRecord r;
    r.id = require_string(j, "id", file, lineno);
    r.title = require_string(j, "title", file, lineno);
    r.author_name = require_string(j, "author", file, lineno);
    r.year = require_int(j, "year", file, lineno);
    r.shortlisted = require_bool(j, "shortlisted", file, lineno);
    r.winner = require_bool(j, "winner", file, lineno);
    r.description = require_string(j, "description", file, lineno);

    if (r.id.empty()) throw ParseError(file, lineno, "field 'id' must be nonempty");
    if (r.year < 1900 || r.year > 2100)
      throw ParseError(file, lineno, "field 'year' out of range 1900..2100: " + std::to_string(r.year));
    if (trim_view(r.description).empty())
      throw ParseError(file, lineno, "field 'description' must be nonempty");

    auto [it, inserted] = id_lines.emplace(r.id, lineno);
    if (!inserted)
      throw ParseError(file, lineno,
                       "duplicate record id '" + r.id + "' (first seen on line " +
                           std::to_string(it->second) + ")");
    records.push_back(std::move(r));
  }
  return records;
}

void save_corpus(std::span<const BookRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write corpus file: " + path.string());
  for (const BookRecord& r : records) {
    json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["author"] = r.author_name;
    j["year"] = r.year;
    j["shortlisted"] = r.shortlisted;
    j["winner"] = r.winner;
    j["description"] = r.description;
    out << j.dump() << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

// Splits a CSV row; no quoting support, which the bundled formats never need.
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> raw = split(line, ',');
  for (std::string& f : raw) f = std::string(trim_view(f));
  return raw;
}

long long parse_integer(const std::string& s, const std::string& file, std::size_t line,
                        const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(file, line, std::string("non-integer ") + what + ": '" + s + "'");
  return value;
}

}  // namespace

NameCensus load_census(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open census file: " + path.string());

  const std::string file = path.string();
  NameCensus census;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    auto fields = csv_fields(line);
    if (lineno == 1 && fields.size() == 3 && ascii_lower(fields[0]) == "name" &&
        ascii_lower(fields[1]) == "gender" && ascii_lower(fields[2]) == "frequency")
      continue;  // header row
    if (fields.size() != 3)
      throw ParseError(file, lineno, "expected 3 fields name,gender,frequency, got " +
                                         std::to_string(fields.size()));
    if (fields[0].empty()) throw ParseError(file, lineno, "empty name");
    std::string g = ascii_lower(fields[1]);
    GenderLabel gender;
    if (g == "m")
      gender = GenderLabel::Male;
    else if (g == "f")
      gender = GenderLabel::Female;
    else
      throw ParseError(file, lineno, "gender must be M or F, got '" + fields[1] + "'");
    long long freq = parse_integer(fields[2], file, lineno, "frequency");
    if (freq < 0) throw ParseError(file, lineno, "negative frequency: " + fields[2]);
    census.add(fields[0], gender, freq);
  }
  return census;
}

OccupationLexicon load_occupations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open occupation lexicon: " + path.string());

  const std::string file = path.string();
  OccupationLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    auto fields = csv_fields(line);
    if (lineno == 1 && fields.size() == 2 && ascii_lower(fields[0]) == "term" &&
        ascii_lower(fields[1]) == "level")
      continue;  // header row
    if (fields.size() != 2)
      throw ParseError(file, lineno,
                       "expected 2 fields term,level, got " + std::to_string(fields.size()));
    if (fields[0].empty()) throw ParseError(file, lineno, "empty term");
    long long level = parse_integer(fields[1], file, lineno, "level");
    if (level < 1 || level > 5)
      throw ParseError(file, lineno, "level outside 1..5: " + fields[1]);
    try {
      lex.add(fields[0], static_cast<int>(level));
    } catch (const std::invalid_argument& e) {
      throw ParseError(file, lineno, e.what());
    }
  }
  return lex;
}

std::unordered_set<std::string> load_wordlist(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open wordlist: " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view word = trim_view(line);
    if (word.empty()) continue;
    words.insert(ascii_lower(word));
  }
  return words;
}

std::map<int, YearGenderCounts> author_gender_counts(std::span<const BookRecord> records,
                                                     const NameCensus& census) {
  std::map<int, YearGenderCounts> counts;
  for (const BookRecord& r : records) {
    std::string_view name = trim_view(r.author_name);
    auto space = name.find_first_of(" \t");
    std::string_view forename = (space == std::string_view::npos) ? name : name.substr(0, space);
    YearGenderCounts& year = counts[r.year];
    switch (census.lookup(forename)) {
      case GenderLabel::Male: year.male++; break;
      case GenderLabel::Female: year.female++; break;
      default: year.unknown++; break;
    }
  }
  return counts;
}

}  // namespace bookbias::corpus
