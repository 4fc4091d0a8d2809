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

#include "bookbias/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "bookbias/stemmer.hpp"
#include "bookbias/strings.hpp"

namespace bookbias::graph {

using textproc::CorefResult;
using textproc::Mention;
using textproc::SvoTriple;
using textproc::Tag;
using textproc::TaggedDocument;

int CharacterGraph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct EdgeAccum {
  int weight = 0;
  std::set<std::string> verbs;
};

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// Stems of every token appearing in the entity's name mentions, so a triple
// object like "mary" can be matched back to the entity Mary.
std::vector<std::unordered_set<std::string>> name_stems(const CorefResult& coref) {
  std::vector<std::unordered_set<std::string>> out(coref.entities.size());
  for (std::size_t e = 0; e < coref.entities.size(); ++e) {
    auto add_tokens = [&](std::string_view text) {
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && !std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) out[e].insert(porter_stem(ascii_lower(text.substr(start, i - start))));
      }
    };
    add_tokens(coref.entities[e].canonical_name);
    for (const Mention& m : coref.entities[e].mentions)
      if (m.kind == Mention::Kind::Name) add_tokens(m.surface);
  }
  return out;
}

}  // namespace

CharacterGraph build_graph(std::span<const SvoTriple> triples, const CorefResult& coref,
                           const TaggedDocument& doc) {
  CharacterGraph g;
  g.nodes.reserve(coref.entities.size());
  for (const auto& entity : coref.entities) g.nodes.push_back({entity.canonical_name, entity.gender});

  const auto stems = name_stems(coref);
  std::map<std::pair<int, int>, EdgeAccum> accum;
  // Pairs already connected by a triple, per sentence; sentence co-occurrence
  // must not double-count those.
  std::set<std::pair<int, std::pair<int, int>>> linked_in_sentence;

  for (const SvoTriple& t : triples) {
    if (!t.has_object()) continue;
    for (std::size_t e = 0; e < coref.entities.size(); ++e) {
      if (static_cast<int>(e) == t.entity_index) continue;
      if (!stems[e].count(t.object_lemma)) continue;
      auto key = ordered(t.entity_index, static_cast<int>(e));
      EdgeAccum& edge = accum[key];
      edge.weight += 1;
      edge.verbs.insert(t.verb_lemma);
      linked_in_sentence.insert({t.sentence_index, key});
    }
  }

  // Sentence co-occurrence route: both entities mentioned + at least one verb.
  std::vector<std::set<int>> entities_in_sentence(doc.sentences.size());
  for (std::size_t e = 0; e < coref.entities.size(); ++e)
    for (const Mention& m : coref.entities[e].mentions)
      if (m.sentence_index >= 0 && static_cast<std::size_t>(m.sentence_index) < doc.sentences.size())
        entities_in_sentence[m.sentence_index].insert(static_cast<int>(e));

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    std::vector<std::string> verbs;
    for (const auto& tt : doc.sentences[s])
      if (tt.tag == Tag::Verb) verbs.push_back(porter_stem(tt.token.lowercase));
    if (verbs.empty()) continue;

    const std::set<int>& present = entities_in_sentence[s];
    for (auto it = present.begin(); it != present.end(); ++it) {
      for (auto jt = std::next(it); jt != present.end(); ++jt) {
        auto key = ordered(*it, *jt);
        if (linked_in_sentence.count({static_cast<int>(s), key})) continue;
        EdgeAccum& edge = accum[key];
        edge.weight += 1;
        edge.verbs.insert(verbs.begin(), verbs.end());
      }
    }
  }

  g.edges.reserve(accum.size());
  for (const auto& [key, edge] : accum) {
    CharacterGraph::Edge e;
    e.a = key.first;
    e.b = key.second;
    e.weight = edge.weight;
    e.verbs.assign(edge.verbs.begin(), edge.verbs.end());
    g.edges.push_back(std::move(e));
  }
  return g;
}

const std::vector<double>& compute_betweenness(CharacterGraph& graph) {
  const std::size_t n = graph.nodes.size();
  graph.centrality.assign(n, 0.0);

  std::vector<std::vector<int>> adj(n);
  for (const auto& e : graph.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& neighbors : adj) std::sort(neighbors.begin(), neighbors.end());

  std::vector<int> stack_order;
  std::vector<std::vector<int>> pred(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<int> dist(n);

  for (std::size_t s = 0; s < n; ++s) {
    stack_order.clear();
    for (auto& p : pred) p.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    sigma[s] = 1.0;
    dist[s] = 0;

    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      stack_order.push_back(v);
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          pred[w].push_back(v);
        }
      }
    }

    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto it = stack_order.rbegin(); it != stack_order.rend(); ++it) {
      int w = *it;
      for (int v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != static_cast<int>(s)) graph.centrality[w] += delta[w];
    }
  }
  // Each unordered pair was visited from both endpoints.
  for (double& c : graph.centrality) c /= 2.0;
  return graph.centrality;
}

std::map<std::string, double> betweenness(const CharacterGraph& graph) {
  if (graph.centrality.size() != graph.nodes.size())
    throw std::logic_error("betweenness: run compute_betweenness first");
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    out[graph.nodes[i].name] = graph.centrality[i];
  return out;
}

std::vector<SwapCandidate> swap_candidates(const CharacterGraph& graph, double epsilon) {
  if (graph.centrality.size() != graph.nodes.size())
    throw std::logic_error("swap_candidates: run compute_betweenness first");
  if (epsilon < 0.0) throw std::invalid_argument("swap_candidates: epsilon must be >= 0");

  std::vector<SwapCandidate> out;
  for (std::size_t m = 0; m < graph.nodes.size(); ++m) {
    if (graph.nodes[m].gender != GenderLabel::Male) continue;
    for (std::size_t f = 0; f < graph.nodes.size(); ++f) {
      if (graph.nodes[f].gender != GenderLabel::Female) continue;
      double diff = std::abs(graph.centrality[m] - graph.centrality[f]);
      if (diff <= epsilon)
        out.push_back({static_cast<int>(m), static_cast<int>(f), diff});
    }
  }
  std::sort(out.begin(), out.end(), [&](const SwapCandidate& a, const SwapCandidate& b) {
    if (a.difference != b.difference) return a.difference < b.difference;
    if (graph.nodes[a.male].name != graph.nodes[b.male].name)
      return graph.nodes[a.male].name < graph.nodes[b.male].name;
    return graph.nodes[a.female].name < graph.nodes[b.female].name;
  });
  return out;
}

double default_epsilon(const CharacterGraph& graph) {
  double max_c = 0.0;
  for (double c : graph.centrality) max_c = std::max(max_c, c);
  return 0.25 * max_c;
}

void export_graph(const CharacterGraph& graph, std::ostream& out) {
  const bool have_centrality = graph.centrality.size() == graph.nodes.size();
  char buf[32];
  out << "nodes " << graph.nodes.size() << '\n';
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    out << i << '\t' << graph.nodes[i].name << '\t' << to_string(graph.nodes[i].gender) << '\t';
    if (have_centrality) {
      std::snprintf(buf, sizeof buf, "%.4f", graph.centrality[i]);
      out << buf;
    } else {
      out << '-';
    }
    out << '\n';
  }
  out << "edges " << graph.edges.size() << '\n';
  for (const auto& e : graph.edges) {
    out << e.a << '\t' << e.b << '\t' << e.weight << '\t';
    for (std::size_t v = 0; v < e.verbs.size(); ++v) {
      if (v) out << ',';
      out << e.verbs[v];
    }
    out << '\n';
  }
}

}  // namespace bookbias::graph
