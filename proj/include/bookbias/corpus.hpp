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

#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bookbias/types.hpp"

namespace bookbias::corpus {

// One prize-listing record: a book plus the publisher's description of it.
struct BookRecord {
  std::string id;
  std::string title;
  std::string author_name;
  int year = 0;
  bool shortlisted = false;
  bool winner = false;
  std::string description;
};

// Given-name -> gender lookup backed by birth-registration frequencies.
// A name listed under both genders resolves to the higher frequency; an
// exact tie resolves to Unknown. Lookups are case-insensitive and the
// result does not depend on input row order.
class NameCensus {
 public:
  void add(std::string_view name, GenderLabel gender, long long frequency);
  GenderLabel lookup(std::string_view name) const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    long long male = 0;
    long long female = 0;
  };
  std::unordered_map<std::string, Entry> entries_;
};

// Occupation term -> seniority level (1 = most menial, 5 = most senior).
// Terms are lowercase and may contain spaces ("child bride").
class OccupationLexicon {
 public:
  void add(std::string_view term, int level);  // throws on duplicate / bad level
  bool contains(std::string_view term) const;
  int level(std::string_view term) const;  // throws if absent
  std::size_t size() const { return levels_.size(); }
  std::size_t max_words() const { return max_words_; }
  const std::map<std::string, int>& terms() const { return levels_; }

 private:
  std::map<std::string, int> levels_;
  std::size_t max_words_ = 0;
};

// Reads a corpus file: one JSON object per line with fields
// id, title, author, year, shortlisted, winner, description.
// Throws ParseError (with the 1-based line number) on the first bad line.
std::vector<BookRecord> parse_corpus(const std::filesystem::path& path);

// Writes records in the same one-object-per-line layout parse_corpus reads.
void save_corpus(std::span<const BookRecord> records, const std::filesystem::path& path);

// CSV "name,gender,frequency" with gender M or F; an optional header row is skipped.
NameCensus load_census(const std::filesystem::path& path);

// CSV "term,level" with level in 1..5; an optional header row is skipped.
OccupationLexicon load_occupations(const std::filesystem::path& path);

// One lowercase word per line; blank lines are ignored.
std::unordered_set<std::string> load_wordlist(const std::filesystem::path& path);

struct YearGenderCounts {
  int male = 0;
  int female = 0;
  int unknown = 0;
};

// Author gender per publication year, resolved from the author's first
// given-name token via the census.
std::map<int, YearGenderCounts> author_gender_counts(std::span<const BookRecord> records,
                                                     const NameCensus& census);

}  // namespace bookbias::corpus
