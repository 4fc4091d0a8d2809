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

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bookbias/textproc.hpp"
#include "bookbias/types.hpp"

namespace bookbias::graph {

// Undirected character-interaction graph for one document. Node order
// follows entity order; edges are stored with a < b and carry the sorted,
// deduplicated verb lemmas that connected the pair.
struct CharacterGraph {
  struct Node {
    std::string name;
    GenderLabel gender = GenderLabel::Unknown;
  };
  struct Edge {
    int a = 0;
    int b = 0;
    int weight = 0;
    std::vector<std::string> verbs;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<double> centrality;  // filled by compute_betweenness

  int index_of(std::string_view name) const;  // -1 if absent
};

// Nodes are the document's entities. An edge joins two entities when a
// triple's subject is one and its object lemma matches the other's name, or
// when both are mentioned in a sentence containing a verb and no triple
// already linked them there. Weight counts such occurrences.
CharacterGraph build_graph(std::span<const textproc::SvoTriple> triples,
                           const textproc::CorefResult& coref,
                           const textproc::TaggedDocument& doc);

// Exact unweighted betweenness (Brandes), unnormalized, each unordered pair
// counted once. Fills graph.centrality and returns it.
const std::vector<double>& compute_betweenness(CharacterGraph& graph);

// Name-keyed view of the same scores.
std::map<std::string, double> betweenness(const CharacterGraph& graph);

struct SwapCandidate {
  int male = 0;    // node index
  int female = 0;  // node index
  double difference = 0.0;
};

// All male-female node pairs whose centralities differ by at most epsilon,
// sorted by ascending difference, then male name, then female name.
// Requires compute_betweenness to have run.
std::vector<SwapCandidate> swap_candidates(const CharacterGraph& graph, double epsilon);

// Default pairing tolerance: a quarter of the largest centrality.
double default_epsilon(const CharacterGraph& graph);

// Plain-text node/edge listing for external visualization.
void export_graph(const CharacterGraph& graph, std::ostream& out);

}  // namespace bookbias::graph
