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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bookbias/corpus.hpp"
#include "bookbias/types.hpp"

using namespace bookbias;
using namespace bookbias::corpus;

namespace {

std::filesystem::path data_dir() { return BOOKBIAS_DATA_DIR; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bb_corpus_" + name);
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sample corpus parses with all fields intact") {
  auto records = parse_corpus(data_dir() / "sample_corpus.jsonl");
  REQUIRE(records.size() == 3);
  CHECK(records[0].id == "s1");
  CHECK(records[0].title == "First");
  CHECK(records[0].author_name == "John Wood");
  CHECK(records[0].year == 1969);
  CHECK(records[0].shortlisted);
  CHECK(records[0].winner);
  CHECK(records[0].description == "John went to market. He bought fruits.");
  CHECK(records[1].year == 1980);
  CHECK_FALSE(records[1].winner);
  CHECK(records[2].year == 2017);
  CHECK_FALSE(records[2].shortlisted);
}

TEST_CASE("corpus parse errors cite the offending line") {
  auto path = temp_file("bad.jsonl");

  SUBCASE("malformed json") {
    write_text(path,
               R"({"id":"a","title":"T","author":"John Wood","year":1990,"shortlisted":true,"winner":false,"description":"x."})"
               "\n{not json\n");
    try {
      parse_corpus(path);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
  }

  SUBCASE("missing field") {
    write_text(path, R"({"id":"a","title":"T","author":"A B","year":1990})" "\n");
    CHECK_THROWS_AS(parse_corpus(path), ParseError);
  }

  SUBCASE("wrong field type") {
    write_text(path,
               R"({"id":"a","title":"T","author":"A B","year":"nineteen","shortlisted":true,"winner":false,"description":"x."})"
               "\n");
    CHECK_THROWS_AS(parse_corpus(path), ParseError);
  }

  SUBCASE("missing file") { CHECK_THROWS(parse_corpus(temp_file("never_written.jsonl"))); }

  std::filesystem::remove(path);
}

TEST_CASE("corpus save/parse round-trip is a fixed point") {
  auto records = parse_corpus(data_dir() / "fixture_corpus.jsonl");
  REQUIRE(records.size() == 50);

  auto first = temp_file("rt1.jsonl");
  auto second = temp_file("rt2.jsonl");
  save_corpus(records, first);
  auto reloaded = parse_corpus(first);
  REQUIRE(reloaded.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CAPTURE(i);
    CHECK(reloaded[i].id == records[i].id);
    CHECK(reloaded[i].title == records[i].title);
    CHECK(reloaded[i].author_name == records[i].author_name);
    CHECK(reloaded[i].year == records[i].year);
    CHECK(reloaded[i].shortlisted == records[i].shortlisted);
    CHECK(reloaded[i].winner == records[i].winner);
    CHECK(reloaded[i].description == records[i].description);
  }
  save_corpus(reloaded, second);
  CHECK(read_text(first) == read_text(second));
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST_CASE("census resolves gender by higher frequency, ties to unknown") {
  NameCensus census;
  census.add("pat", GenderLabel::Male, 50);
  census.add("pat", GenderLabel::Female, 70);
  census.add("sam", GenderLabel::Male, 40);
  census.add("sam", GenderLabel::Female, 40);
  CHECK(census.lookup("pat") == GenderLabel::Female);
  CHECK(census.lookup("sam") == GenderLabel::Unknown);
  CHECK(census.lookup("unlisted") == GenderLabel::Unknown);

  // Row order must not matter.
  NameCensus reversed;
  reversed.add("pat", GenderLabel::Female, 70);
  reversed.add("pat", GenderLabel::Male, 50);
  CHECK(reversed.lookup("pat") == census.lookup("pat"));

  // Repeated rows for the same gender accumulate.
  NameCensus repeated;
  repeated.add("kim", GenderLabel::Male, 30);
  repeated.add("kim", GenderLabel::Male, 30);
  repeated.add("kim", GenderLabel::Female, 50);
  CHECK(repeated.lookup("kim") == GenderLabel::Male);
}

TEST_CASE("bundled census loads and lookups are case-insensitive") {
  auto census = load_census(data_dir() / "census.csv");
  CHECK(census.size() > 150);
  CHECK(census.lookup("john") == GenderLabel::Male);
  CHECK(census.lookup("John") == GenderLabel::Male);
  CHECK(census.lookup("JOHN") == GenderLabel::Male);
  CHECK(census.lookup("mary") == GenderLabel::Female);
  CHECK(census.lookup("guinevere") == GenderLabel::Female);
  CHECK(census.lookup("arthur") == GenderLabel::Male);
  CHECK(census.lookup("zzz-no-such-name") == GenderLabel::Unknown);
}

TEST_CASE("census file errors cite the line") {
  auto path = temp_file("census_bad.csv");

  SUBCASE("bad gender letter") {
    write_text(path, "name,gender,frequency\nalice,F,10\nbob,Q,5\n");
    try {
      load_census(path);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }

  SUBCASE("bad frequency") {
    write_text(path, "alice,F,ten\n");
    CHECK_THROWS_AS(load_census(path), ParseError);
  }

  SUBCASE("wrong field count") {
    write_text(path, "alice,F\n");
    CHECK_THROWS_AS(load_census(path), ParseError);
  }

  std::filesystem::remove(path);
}

TEST_CASE("occupation lexicon levels, multiword terms, and validation") {
  auto lex = load_occupations(data_dir() / "occupations.csv");
  CHECK(lex.size() > 60);
  CHECK(lex.contains("doctor"));
  CHECK(lex.level("doctor") == 5);
  CHECK(lex.level("nurse") == 2);
  CHECK(lex.level("maid") == 1);
  CHECK(lex.level("teacher") == 3);
  CHECK(lex.contains("child bride"));
  CHECK(lex.level("child bride") == 1);
  CHECK(lex.max_words() == 3);  // "lady in waiting"
  CHECK_FALSE(lex.contains("garden"));
  CHECK_FALSE(lex.contains("king"));

  OccupationLexicon own;
  own.add("smith", 3);
  CHECK_THROWS(own.add("smith", 4));  // duplicate term
  CHECK_THROWS(own.add("outside", 0));
  CHECK_THROWS(own.add("outside", 6));
  CHECK_THROWS(own.level("absent"));
}

TEST_CASE("occupation file errors cite the line") {
  auto path = temp_file("occ_bad.csv");
  write_text(path, "term,level\ndoctor,5\nwizard,nine\n");
  try {
    load_occupations(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  std::filesystem::remove(path);
}

TEST_CASE("wordlist loads lowercase entries and skips blanks") {
  auto words = load_wordlist(data_dir() / "dictionary.txt");
  CHECK(words.size() > 200);
  CHECK(words.count("he") == 1);
  CHECK(words.count("she") == 1);
  CHECK(words.count("doctor") == 1);

  auto path = temp_file("words.txt");
  write_text(path, "alpha\n\nbeta\n\n");
  auto small = load_wordlist(path);
  CHECK(small.size() == 2);
  CHECK(small.count("alpha") == 1);
  CHECK(small.count("beta") == 1);
  std::filesystem::remove(path);
}

TEST_CASE("author gender tallies come from the first given name") {
  auto census = load_census(data_dir() / "census.csv");
  auto records = parse_corpus(data_dir() / "sample_corpus.jsonl");
  auto counts = author_gender_counts(records, census);
  REQUIRE(counts.size() == 3);
  CHECK(counts.at(1969).male == 1);
  CHECK(counts.at(1969).female == 0);
  CHECK(counts.at(1980).female == 1);
  CHECK(counts.at(2017).female == 1);

  // An author whose forename is not in the census counts as unknown.
  std::vector<BookRecord> odd{{"x1", "T", "Zyx Doe", 2000, true, false, "A tale."}};
  auto odd_counts = author_gender_counts(odd, census);
  CHECK(odd_counts.at(2000).unknown == 1);

  // Fixture corpus authors split evenly by construction.
  auto fixture = parse_corpus(data_dir() / "fixture_corpus.jsonl");
  auto fc = author_gender_counts(fixture, census);
  int male = 0, female = 0, unknown = 0;
  for (const auto& [year, c] : fc) {
    male += c.male;
    female += c.female;
    unknown += c.unknown;
  }
  CHECK(male == 25);
  CHECK(female == 25);
  CHECK(unknown == 0);
}
