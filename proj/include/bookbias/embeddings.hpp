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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bookbias/types.hpp"

namespace bookbias::embeddings {

// Word -> dense vector table. Insertion order is preserved (file order for
// loaded tables, frequency order for trained ones); all vectors share one
// dimension and must be finite.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dimension) : dimension_(dimension) {}

  void add(std::string_view word, std::vector<double> vec);  // throws on misuse
  bool contains(std::string_view word) const;
  const std::vector<double>& vector(std::string_view word) const;  // throws if absent
  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_ = 0;
  std::vector<std::string> words_;
  std::vector<std::vector<double>> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Text interchange format: header "V D", then one "word c1 .. cD" line per
// word. load throws ParseError with the offending 1-based line number.
EmbeddingTable load_embeddings(const std::filesystem::path& path);

// Writes words in lexicographic order with 6-decimal fixed precision, so
// identical tables always serialize to identical bytes.
void save_embeddings(const EmbeddingTable& table, const std::filesystem::path& path);

// Cosine similarity in [-1, 1] (up to rounding). Throws on a zero vector
// or mismatched dimensions.
double cosine(std::span<const double> u, std::span<const double> v);

// Training-corpus normalization: keep tokens whose lowercase form is in the
// dictionary, then stem the survivors. Output order follows input order.
std::vector<std::string> preprocess_facts(std::span<const std::string> tokens,
                                          const std::unordered_set<std::string>& dictionary);

struct TrainConfig {
  std::size_t dimension = 100;
  int window = 5;           // max context offset; per-position width sampled in [1, window]
  int negatives = 5;        // negative samples per context pair
  int epochs = 5;
  double learning_rate = 0.025;  // linearly decayed
  int min_count = 5;        // words below this count are dropped
  std::uint64_t seed = 1;
};

// Skip-gram with negative sampling. Single-threaded and fully deterministic:
// the same tokens, config and seed reproduce the table bit for bit.
EmbeddingTable train_skipgram(std::span<const std::string> tokens, const TrainConfig& config);

}  // namespace bookbias::embeddings
