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
#include <deque>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bookbias/corpus.hpp"
#include "bookbias/graph.hpp"
#include "bookbias/textproc.hpp"

using namespace bookbias;
using namespace bookbias::graph;

namespace {

std::filesystem::path data_dir() { return BOOKBIAS_DATA_DIR; }

CharacterGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  CharacterGraph g;
  for (int i = 0; i < n; ++i)
    g.nodes.push_back({"n" + std::to_string(i), GenderLabel::Unknown});
  for (auto [a, b] : edges) g.edges.push_back({a, b, 1, {}});
  return g;
}

// Brute-force betweenness: enumerate every shortest path explicitly.
std::vector<double> brute_betweenness(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<double> score(n, 0.0);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      // BFS distances from s.
      std::vector<int> dist(n, -1);
      std::deque<int> queue{s};
      dist[s] = 0;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u])
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
      }
      if (dist[t] < 0) continue;  // unreachable
      // Recursively enumerate all shortest s->t paths, tallying interiors.
      std::vector<int> interior_counts(n, 0);
      int path_count = 0;
      std::vector<int> path;
      auto walk = [&](auto&& self, int u) -> void {
        if (u == t) {
          ++path_count;
          for (int w : path)
            if (w != s) ++interior_counts[w];
          return;
        }
        for (int v : adj[u]) {
          if (dist[v] == dist[u] + 1 && dist[v] <= dist[t]) {
            path.push_back(v);
            self(self, v);
            path.pop_back();
          }
        }
      };
      walk(walk, s);
      for (int v = 0; v < n; ++v)
        if (v != s && v != t && interior_counts[v] > 0)
          score[v] += static_cast<double>(interior_counts[v]) / path_count;
    }
  }
  return score;
}

textproc::TaggedDocument tagged(const std::string& text) {
  static const textproc::TagLexicon lex = textproc::TagLexicon::load(data_dir() / "tags.csv");
  return textproc::tag_document(textproc::tokenize(text), lex);
}

struct BuiltDoc {
  textproc::TaggedDocument doc;
  textproc::CorefResult coref;
  std::vector<textproc::SvoTriple> triples;
  CharacterGraph graph;
};

BuiltDoc build_from(const std::string& text) {
  static const corpus::NameCensus census = corpus::load_census(data_dir() / "census.csv");
  BuiltDoc b;
  b.doc = tagged(text);
  b.coref = textproc::resolve_coreference(b.doc, census);
  b.triples = textproc::extract_svo(b.doc, b.coref);
  b.graph = build_graph(b.triples, b.coref, b.doc);
  return b;
}

}  // namespace

TEST_CASE("betweenness matches hand-computed small graphs") {
  SUBCASE("path of three: the middle carries one pair") {
    auto g = make_graph(3, {{0, 1}, {1, 2}});
    auto c = compute_betweenness(g);
    CHECK(c[0] == doctest::Approx(0.0));
    CHECK(c[1] == doctest::Approx(1.0));
    CHECK(c[2] == doctest::Approx(0.0));
  }

  SUBCASE("path of four") {
    auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto c = compute_betweenness(g);
    CHECK(c[1] == doctest::Approx(2.0));
    CHECK(c[2] == doctest::Approx(2.0));
  }

  SUBCASE("triangle has no interior vertices") {
    auto g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    for (double c : compute_betweenness(g)) CHECK(c == doctest::Approx(0.0));
  }

  SUBCASE("star center carries every leaf pair") {
    auto g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto c = compute_betweenness(g);
    CHECK(c[0] == doctest::Approx(3.0));
    CHECK(c[1] == doctest::Approx(0.0));
  }

  SUBCASE("diamond splits flow between two equal routes") {
    // 0-1, 0-2, 1-3, 2-3: the (0,3) pair splits across 1 and 2.
    auto g = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto c = compute_betweenness(g);
    CHECK(c[1] == doctest::Approx(0.5));
    CHECK(c[2] == doctest::Approx(0.5));
  }

  SUBCASE("complete graph is all zeros") {
    auto g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (double c : compute_betweenness(g)) CHECK(c == doctest::Approx(0.0));
  }

  SUBCASE("disconnected components are scored independently") {
    auto g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    auto c = compute_betweenness(g);
    CHECK(c[1] == doctest::Approx(1.0));
    CHECK(c[4] == doctest::Approx(1.0));
    CHECK(c[0] == doctest::Approx(0.0));
  }

  SUBCASE("isolated nodes and empty graphs") {
    auto g = make_graph(3, {});
    for (double c : compute_betweenness(g)) CHECK(c == 0.0);
    auto empty = make_graph(0, {});
    CHECK(compute_betweenness(empty).empty());
  }
}

TEST_CASE("betweenness agrees with brute-force path enumeration") {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);  // 2..8 nodes
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 100 < 40) edges.emplace_back(a, b);

    auto g = make_graph(n, edges);
    auto fast = compute_betweenness(g);
    auto slow = brute_betweenness(n, edges);
    REQUIRE(fast.size() == static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      CAPTURE(trial);
      CAPTURE(v);
      CHECK(std::abs(fast[v] - slow[v]) < 1e-9);
    }
  }
}

TEST_CASE("triples whose object names another character create edges") {
  auto b = build_from("John met Mary. John helped Mary.");
  REQUIRE(b.graph.nodes.size() == 2);
  CHECK(b.graph.nodes[0].name == "John");
  CHECK(b.graph.nodes[0].gender == GenderLabel::Male);
  CHECK(b.graph.nodes[1].name == "Mary");
  CHECK(b.graph.nodes[1].gender == GenderLabel::Female);

  REQUIRE(b.graph.edges.size() == 1);
  const auto& e = b.graph.edges[0];
  CHECK(e.a == 0);
  CHECK(e.b == 1);
  CHECK(e.weight == 2);  // one per linking triple, no co-occurrence double count
  CHECK(e.verbs == std::vector<std::string>{"help", "met"});  // sorted, stemmed
}

TEST_CASE("co-occurrence with a verb links characters no triple connected") {
  auto b = build_from("John and Mary walked.");
  REQUIRE(b.graph.nodes.size() == 2);
  REQUIRE(b.graph.edges.size() == 1);
  CHECK(b.graph.edges[0].weight == 1);
  CHECK(b.graph.edges[0].verbs == std::vector<std::string>{"walk"});

  // Without any verb in the sentence there is no interaction to record.
  auto quiet = build_from("John and Mary.");
  CHECK(quiet.graph.nodes.size() == 2);
  CHECK(quiet.graph.edges.empty());
}

TEST_CASE("pronoun mentions carry interactions too") {
  // "He" resolves to John, and the object lemma "mari" names Mary.
  auto b = build_from("John slept. Mary slept. He thanked Mary.");
  REQUIRE(b.graph.nodes.size() == 2);
  REQUIRE(b.graph.edges.size() == 1);
  CHECK(b.graph.edges[0].weight >= 1);
  bool has_thank = false;
  for (const auto& v : b.graph.edges[0].verbs) has_thank |= v == "thank";
  CHECK(has_thank);
}

TEST_CASE("graphs built twice from the same document are identical") {
  const std::string text =
      "John met Mary. Tom greeted Anna. John and Tom walked. Mary thanked Anna.";
  auto first = build_from(text);
  auto second = build_from(text);
  REQUIRE(first.graph.nodes.size() == second.graph.nodes.size());
  REQUIRE(first.graph.edges.size() == second.graph.edges.size());
  for (std::size_t i = 0; i < first.graph.edges.size(); ++i) {
    CHECK(first.graph.edges[i].a == second.graph.edges[i].a);
    CHECK(first.graph.edges[i].b == second.graph.edges[i].b);
    CHECK(first.graph.edges[i].weight == second.graph.edges[i].weight);
    CHECK(first.graph.edges[i].verbs == second.graph.edges[i].verbs);
  }
}

TEST_CASE("node lookup by name") {
  auto b = build_from("John met Mary.");
  CHECK(b.graph.index_of("John") == 0);
  CHECK(b.graph.index_of("Mary") == 1);
  CHECK(b.graph.index_of("Zelda") == -1);
}

TEST_CASE("swap candidates pair males with females inside the tolerance") {
  CharacterGraph g;
  g.nodes.push_back({"Adam", GenderLabel::Male});
  g.nodes.push_back({"Bob", GenderLabel::Male});
  g.nodes.push_back({"Cara", GenderLabel::Female});
  g.nodes.push_back({"Dana", GenderLabel::Female});
  g.nodes.push_back({"Quinn", GenderLabel::Unknown});

  SUBCASE("requires centrality") {
    CHECK_THROWS_AS(swap_candidates(g, 1.0), std::logic_error);
    CHECK_THROWS_AS(betweenness(g), std::logic_error);
  }

  g.centrality = {0.0, 1.0, 0.25, 1.1, 0.5};

  SUBCASE("filters by absolute difference and sorts ascending") {
    auto c = swap_candidates(g, 0.3);
    REQUIRE(c.size() == 2);
    CHECK(c[0].male == 1);  // Bob & Dana, diff 0.1
    CHECK(c[0].female == 3);
    CHECK(c[0].difference == doctest::Approx(0.1));
    CHECK(c[1].male == 0);  // Adam & Cara, diff 0.25
    CHECK(c[1].female == 2);

    // Unknown-gender nodes never appear.
    for (const auto& cand : c) {
      CHECK(g.nodes[cand.male].gender == GenderLabel::Male);
      CHECK(g.nodes[cand.female].gender == GenderLabel::Female);
    }
  }

  SUBCASE("a huge tolerance admits every male-female pair") {
    CHECK(swap_candidates(g, 100.0).size() == 4);
  }

  SUBCASE("equal differences fall back to name order") {
    CharacterGraph tie;
    tie.nodes.push_back({"Zeke", GenderLabel::Male});
    tie.nodes.push_back({"Abel", GenderLabel::Male});
    tie.nodes.push_back({"Mia", GenderLabel::Female});
    tie.nodes.push_back({"Ada", GenderLabel::Female});
    tie.centrality = {1.0, 1.0, 1.0, 1.0};
    auto c = swap_candidates(tie, 0.0);
    REQUIRE(c.size() == 4);
    CHECK(tie.nodes[c[0].male].name == "Abel");
    CHECK(tie.nodes[c[0].female].name == "Ada");
    CHECK(tie.nodes[c[1].male].name == "Abel");
    CHECK(tie.nodes[c[1].female].name == "Mia");
    CHECK(tie.nodes[c[2].male].name == "Zeke");
    CHECK(tie.nodes[c[2].female].name == "Ada");
  }
}

TEST_CASE("default tolerance is a quarter of the peak centrality") {
  auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  compute_betweenness(g);  // peak 2.0
  CHECK(default_epsilon(g) == doctest::Approx(0.5));

  auto flat = make_graph(2, {{0, 1}});
  compute_betweenness(flat);
  CHECK(default_epsilon(flat) == doctest::Approx(0.0));
}

TEST_CASE("betweenness map view keys scores by character name") {
  auto b = build_from("John met Mary. Mary met Anna.");
  compute_betweenness(b.graph);
  auto scores = betweenness(b.graph);
  REQUIRE(scores.size() == 3);
  CHECK(scores.at("Mary") == doctest::Approx(1.0));
  CHECK(scores.at("John") == doctest::Approx(0.0));
  CHECK(scores.at("Anna") == doctest::Approx(0.0));
}

TEST_CASE("graph export lists nodes then edges") {
  auto b = build_from("John met Mary.");
  std::ostringstream without;
  export_graph(b.graph, without);
  CHECK(without.str() ==
        "nodes 2\n"
        "0\tJohn\tmale\t-\n"
        "1\tMary\tfemale\t-\n"
        "edges 1\n"
        "0\t1\t1\tmet\n");

  compute_betweenness(b.graph);
  std::ostringstream with;
  export_graph(b.graph, with);
  CHECK(with.str() ==
        "nodes 2\n"
        "0\tJohn\tmale\t0.0000\n"
        "1\tMary\tfemale\t0.0000\n"
        "edges 1\n"
        "0\t1\t1\tmet\n");
}
