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
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bookbias/embeddings.hpp"
#include "bookbias/types.hpp"

namespace bookbias::analogy {

struct PairConfig {
  double tau = 0.7;    // analogy acceptance threshold on pair_score
  double tau1 = 0.35;  // gender-specific cutoff on d_h = 1 - cos(x, he)
  double tau2 = 0.35;  // gender-specific cutoff on d_w = 1 - cos(y, she)
};

enum class PairLabel { GenderSpecific, GenderNeutral };

const char* to_string(PairLabel label);
PairLabel pair_label_from_string(std::string_view s);  // throws on unknown

// A directed analogical pair: x plays the "he" side, y the "she" side.
struct AnalogicalPair {
  std::string x;
  std::string y;
  double score = 0.0;  // ||n(he - she) - n(x - y)||
  double d_h = 0.0;    // 1 - cos(x, he)
  double d_w = 0.0;    // 1 - cos(y, she)
  PairLabel label = PairLabel::GenderNeutral;
};

// How well (x, y) mirrors the he->she axis: the L2 distance between the
// normalized difference vectors. 0 means a perfect analogy; lower is better.
// Throws if a word (or he/she) is missing, if x == y, or if a difference
// vector is zero.
double pair_score(const std::string& x, const std::string& y,
                  const embeddings::EmbeddingTable& table);

struct Classification {
  double d_h = 0.0;
  double d_w = 0.0;
  PairLabel label = PairLabel::GenderNeutral;
};

// Gender-specific iff d_h < tau1 OR d_w < tau2 (strict); gender-neutral
// otherwise. Every pair gets exactly one label.
Classification classify_pair(const std::string& x, const std::string& y,
                             const embeddings::EmbeddingTable& table, const PairConfig& config);

struct Rejection {
  std::string x;
  std::string y;
  std::string reason;
};

struct ExtractResult {
  std::vector<AnalogicalPair> pairs;      // score <= tau, sorted by (score, x, y)
  std::vector<Rejection> rejections;      // per-candidate errors, not failures
};

// Scores and classifies every candidate. Candidates that error (OOV, x == y,
// zero difference, duplicates) are recorded as rejections and skipped.
ExtractResult extract_pairs(const embeddings::EmbeddingTable& table,
                            std::span<const std::pair<std::string, std::string>> candidates,
                            const PairConfig& config);

// Built-in function-word stopword set (plus the stems of its members, since
// trained vocabularies are stemmed).
const std::unordered_set<std::string>& builtin_stopwords();

// All ordered pairs (x, y), x != y, over the first top_n non-stopword words
// in vocabulary order. Pass a set to override the built-in stopwords.
std::vector<std::pair<std::string, std::string>> default_candidates(
    const embeddings::EmbeddingTable& table, std::size_t top_n = 2000,
    const std::unordered_set<std::string>* stopwords = nullptr);

struct KbProvenance {
  std::string embeddings_path;
  std::size_t vocabulary = 0;
  std::size_t dimension = 0;
  std::string content_hash;  // fnv1a-64 of the embedding file bytes
  PairConfig config;
  std::string version = kVersion;
};

struct KnowledgeBase {
  KbProvenance provenance;
  std::vector<AnalogicalPair> pairs;  // no duplicate (x, y)
};

// Newline-delimited records: a provenance header line followed by one pair
// per line. Round-trips losslessly; load throws ParseError with the line
// number on malformed or duplicate records.
void save_kb(const KnowledgeBase& kb, const std::filesystem::path& path);
KnowledgeBase load_kb(const std::filesystem::path& path);

}  // namespace bookbias::analogy
