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

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bookbias/embeddings.hpp"
#include "bookbias/types.hpp"

using namespace bookbias;
using namespace bookbias::embeddings;

namespace {

std::filesystem::path data_dir() { return BOOKBIAS_DATA_DIR; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bb_emb_" + name);
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

std::size_t error_line(const std::string& content) {
  auto path = temp_file("err.txt");
  write_text(path, content);
  std::size_t line = 0;
  try {
    load_embeddings(path);
  } catch (const ParseError& e) {
    line = e.line;
  }
  std::filesystem::remove(path);
  REQUIRE(line > 0);  // a ParseError was thrown
  return line;
}

}  // namespace

TEST_CASE("embedding table stores vectors in insertion order") {
  EmbeddingTable table(3);
  table.add("beta", {1.0, 2.0, 3.0});
  table.add("alpha", {4.0, 5.0, 6.0});
  CHECK(table.size() == 2);
  CHECK(table.dimension() == 3);
  CHECK(table.contains("beta"));
  CHECK_FALSE(table.contains("gamma"));
  CHECK(table.words() == std::vector<std::string>{"beta", "alpha"});
  CHECK(table.vector("alpha")[0] == 4.0);
  CHECK_THROWS(table.vector("gamma"));

  CHECK_THROWS(table.add("alpha", {7.0, 8.0, 9.0}));      // duplicate
  CHECK_THROWS(table.add("short", {1.0, 2.0}));           // wrong dimension
  CHECK_THROWS(table.add("", {1.0, 2.0, 3.0}));           // empty word
  CHECK_THROWS(table.add("inf", {1.0, 2.0, INFINITY}));   // non-finite
}

TEST_CASE("cosine similarity matches hand values and rejects bad input") {
  std::vector<double> x{1.0, 0.0, 0.0};
  std::vector<double> y{0.0, 1.0, 0.0};
  std::vector<double> xy{1.0, 1.0, 0.0};
  CHECK(cosine(x, x) == doctest::Approx(1.0));
  CHECK(cosine(x, y) == doctest::Approx(0.0));
  CHECK(cosine(x, xy) == doctest::Approx(1.0 / std::sqrt(2.0)));
  std::vector<double> neg{-1.0, 0.0, 0.0};
  CHECK(cosine(x, neg) == doctest::Approx(-1.0));

  std::vector<double> zero{0.0, 0.0, 0.0};
  CHECK_THROWS(cosine(x, zero));
  std::vector<double> two{1.0, 2.0};
  CHECK_THROWS(cosine(x, two));
}

TEST_CASE("bundled embedding fixture loads with exact values") {
  auto table = load_embeddings(data_dir() / "fixture_embeddings.txt");
  CHECK(table.size() == 8);
  CHECK(table.dimension() == 3);
  CHECK(table.vector("he") == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(table.vector("she") == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(table.vector("doctor") == std::vector<double>{1.0, 0.0, 1.0});
  CHECK(table.vector("nurs") == std::vector<double>{0.0, 1.0, 1.0});
}

TEST_CASE("save orders words lexicographically and round-trips bytes") {
  EmbeddingTable table(2);
  table.add("zeta", {0.5, -0.25});
  table.add("alpha", {1.0, 2.0});
  table.add("mid", {-0.125, 0.375});

  auto first = temp_file("rt1.txt");
  auto second = temp_file("rt2.txt");
  save_embeddings(table, first);

  auto text = read_text(first);
  CHECK(text.substr(0, 4) == "3 2\n");
  CHECK(text.find("alpha 1.000000 2.000000\n") != std::string::npos);
  CHECK(text.find("alpha") < text.find("mid"));
  CHECK(text.find("mid") < text.find("zeta"));

  auto loaded = load_embeddings(first);
  CHECK(loaded.size() == 3);
  for (const auto& word : table.words()) {
    CAPTURE(word);
    const auto& a = table.vector(word);
    const auto& b = loaded.vector(word);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-6));
  }

  // Values exactly representable at 6 decimals survive unchanged, so a
  // second save is byte-identical.
  save_embeddings(loaded, second);
  CHECK(read_text(first) == read_text(second));
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST_CASE("embedding file errors cite the offending line") {
  CHECK(error_line("not a header\nalpha 1 2\n") == 1);
  CHECK(error_line("2 3\nalpha 1 2 3\nbeta 1 2\n") == 3);       // short row
  CHECK(error_line("1 3\nalpha 1 two 3\n") == 2);               // non-numeric
  CHECK(error_line("1 3\nalpha 1 inf 3\n") == 2);               // non-finite
  CHECK(error_line("2 2\nalpha 1 2\nalpha 3 4\n") == 3);        // duplicate
  CHECK(error_line("3 2\nalpha 1 2\nbeta 3 4\n") == 4);         // truncated file
  CHECK(error_line("0 2\n") == 1);                              // empty table
  CHECK(error_line("2 0\nalpha\nbeta\n") == 1);                 // zero dimension
  CHECK(error_line("2 2\nalpha 1 2\n\nbeta 3 4\n") == 3);       // blank line
}

TEST_CASE("corpus normalization filters by dictionary then stems") {
  std::unordered_set<std::string> dict{"running", "dogs", "doctor", "she"};
  std::vector<std::string> tokens{"Running", "xqzt", "dogs", "DOCTOR", "she", "the"};
  auto out = preprocess_facts(tokens, dict);
  CHECK(out == std::vector<std::string>{"run", "dog", "doctor", "she"});

  // An empty dictionary filters everything out.
  std::unordered_set<std::string> empty;
  CHECK(preprocess_facts(tokens, empty).empty());
}

TEST_CASE("trainer is deterministic for a fixed seed") {
  std::vector<std::string> tokens;
  std::mt19937 rng(99);
  std::vector<std::string> pool{"red", "green", "blue", "cyan", "teal", "plum"};
  for (int i = 0; i < 3000; ++i) tokens.push_back(pool[rng() % pool.size()]);

  TrainConfig cfg;
  cfg.dimension = 8;
  cfg.window = 3;
  cfg.negatives = 4;
  cfg.epochs = 2;
  cfg.min_count = 1;
  cfg.seed = 42;

  auto a = train_skipgram(tokens, cfg);
  auto b = train_skipgram(tokens, cfg);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == pool.size());
  for (const auto& word : a.words()) {
    const auto& va = a.vector(word);
    const auto& vb = b.vector(word);
    REQUIRE(va.size() == vb.size());
    for (std::size_t i = 0; i < va.size(); ++i) {
      CAPTURE(word);
      CHECK(va[i] == vb[i]);  // bitwise equality, not approximate
    }
  }

  cfg.seed = 43;
  auto c = train_skipgram(tokens, cfg);
  bool any_differ = false;
  for (const auto& word : a.words()) {
    const auto& va = a.vector(word);
    const auto& vc = c.vector(word);
    for (std::size_t i = 0; i < va.size(); ++i) {
      if (va[i] != vc[i]) any_differ = true;
    }
  }
  CHECK(any_differ);
}

TEST_CASE("trainer vocabulary is ordered by count then word") {
  std::vector<std::string> tokens;
  for (int i = 0; i < 30; ++i) tokens.push_back("common");
  for (int i = 0; i < 20; ++i) tokens.push_back("beta");
  for (int i = 0; i < 20; ++i) tokens.push_back("alpha");
  for (int i = 0; i < 10; ++i) tokens.push_back("rare");
  for (int i = 0; i < 2; ++i) tokens.push_back("dropped");

  TrainConfig cfg;
  cfg.dimension = 4;
  cfg.window = 2;
  cfg.epochs = 1;
  cfg.min_count = 5;
  auto table = train_skipgram(tokens, cfg);
  CHECK(table.words() ==
        std::vector<std::string>{"common", "alpha", "beta", "rare"});
  CHECK_FALSE(table.contains("dropped"));

  // Tokens are lowercased before counting.
  std::vector<std::string> mixed{"Apple", "APPLE", "apple", "pear", "pear", "pear"};
  cfg.min_count = 1;
  auto folded = train_skipgram(mixed, cfg);
  CHECK(folded.contains("apple"));
  CHECK_FALSE(folded.contains("Apple"));
}

TEST_CASE("trainer rejects empty vocabularies and bad settings") {
  std::vector<std::string> tokens{"one", "two"};
  TrainConfig cfg;
  cfg.min_count = 10;  // nothing survives
  CHECK_THROWS_AS(train_skipgram(tokens, cfg), std::runtime_error);

  std::vector<std::string> none;
  TrainConfig ok;
  ok.min_count = 1;
  CHECK_THROWS_AS(train_skipgram(none, ok), std::runtime_error);

  TrainConfig bad = ok;
  bad.dimension = 0;
  CHECK_THROWS(train_skipgram(tokens, bad));
  bad = ok;
  bad.window = 0;
  CHECK_THROWS(train_skipgram(tokens, bad));
  bad = ok;
  bad.epochs = 0;
  CHECK_THROWS(train_skipgram(tokens, bad));
  bad = ok;
  bad.learning_rate = 0.0;
  CHECK_THROWS(train_skipgram(tokens, bad));
}

TEST_CASE("words sharing contexts end up closer than words that do not") {
  std::vector<std::string> fruit{"apple", "pear", "plum", "sweet", "ripe"};
  std::vector<std::string> mineral{"rock", "stone", "iron", "hard", "grey"};
  std::vector<std::string> tokens;
  std::mt19937 rng(7);
  for (int block = 0; block < 200; ++block) {
    const auto& pool = (block % 2 == 0) ? fruit : mineral;
    for (int i = 0; i < 20; ++i) tokens.push_back(pool[rng() % pool.size()]);
  }

  TrainConfig cfg;
  cfg.dimension = 16;
  cfg.window = 4;
  cfg.negatives = 5;
  cfg.epochs = 8;
  cfg.min_count = 1;
  cfg.seed = 7;
  auto table = train_skipgram(tokens, cfg);
  REQUIRE(table.contains("apple"));
  double same_topic = cosine(table.vector("apple"), table.vector("pear"));
  double cross_topic = cosine(table.vector("apple"), table.vector("rock"));
  CHECK(same_topic > cross_topic);
}
