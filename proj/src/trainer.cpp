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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "bookbias/embeddings.hpp"
#include "bookbias/strings.hpp"

namespace bookbias::embeddings {

namespace {

constexpr int kExpTableSize = 1000;
constexpr double kMaxExp = 6.0;
constexpr std::size_t kUnigramTableSize = 1000000;

// Precomputed logistic values over [-kMaxExp, kMaxExp], word2vec style.
std::vector<double> make_sigmoid_table() {
  std::vector<double> table(kExpTableSize);
  for (int i = 0; i < kExpTableSize; ++i) {
    double x = (2.0 * i / kExpTableSize - 1.0) * kMaxExp;
    double e = std::exp(x);
    table[i] = e / (e + 1.0);
  }
  return table;
}

double sigmoid(double x, const std::vector<double>& table) {
  if (x >= kMaxExp) return 1.0;
  if (x <= -kMaxExp) return 0.0;
  int idx = static_cast<int>((x + kMaxExp) * (kExpTableSize / (2.0 * kMaxExp)));
  if (idx < 0) idx = 0;
  if (idx >= kExpTableSize) idx = kExpTableSize - 1;
  return table[idx];
}

// Noise distribution proportional to count^0.75.
std::vector<int> make_unigram_table(const std::vector<long long>& counts) {
  std::vector<int> table(kUnigramTableSize);
  double total = 0.0;
  for (long long c : counts) total += std::pow(static_cast<double>(c), 0.75);
  std::size_t word = 0;
  double cumulative = std::pow(static_cast<double>(counts[0]), 0.75) / total;
  for (std::size_t i = 0; i < kUnigramTableSize; ++i) {
    table[i] = static_cast<int>(word);
    if (static_cast<double>(i + 1) / kUnigramTableSize > cumulative && word + 1 < counts.size()) {
      ++word;
      cumulative += std::pow(static_cast<double>(counts[word]), 0.75) / total;
    }
  }
  return table;
}

double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa
}

}  // namespace

EmbeddingTable train_skipgram(std::span<const std::string> tokens, const TrainConfig& config) {
  if (config.dimension == 0 || config.window <= 0 || config.negatives < 0 || config.epochs <= 0 ||
      config.learning_rate <= 0.0 || config.min_count <= 0)
    throw std::invalid_argument("train_skipgram: all hyperparameters must be positive");

  // Vocabulary: count ≥ min_count, ordered by descending count then word.
  std::map<std::string, long long> counts;
  for (const std::string& t : tokens) ++counts[ascii_lower(t)];

  std::vector<std::pair<std::string, long long>> vocab;
  for (const auto& [word, count] : counts)
    if (count >= config.min_count) vocab.emplace_back(word, count);
  std::sort(vocab.begin(), vocab.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (vocab.empty())
    throw std::runtime_error("train_skipgram: no word reaches min_count " +
                             std::to_string(config.min_count));

  std::unordered_map<std::string, int> index;
  std::vector<long long> vocab_counts;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    index.emplace(vocab[i].first, static_cast<int>(i));
    vocab_counts.push_back(vocab[i].second);
  }

  // Token stream with out-of-vocabulary words dropped.
  std::vector<int> stream;
  stream.reserve(tokens.size());
  for (const std::string& t : tokens) {
    auto it = index.find(ascii_lower(t));
    if (it != index.end()) stream.push_back(it->second);
  }

  const std::size_t V = vocab.size();
  const std::size_t D = config.dimension;
  std::mt19937_64 rng(config.seed);

  std::vector<double> syn0(V * D);
  std::vector<double> syn1(V * D, 0.0);
  for (double& w : syn0) w = (uniform01(rng) - 0.5) / static_cast<double>(D);

  const std::vector<double> sig = make_sigmoid_table();
  const std::vector<int> noise = make_unigram_table(vocab_counts);

  const double lr0 = config.learning_rate;
  const double lr_floor = lr0 * 1e-4;
  const double total_words =
      static_cast<double>(config.epochs) * static_cast<double>(std::max<std::size_t>(stream.size(), 1));
  double processed = 0.0;
  std::vector<double> grad(D);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t pos = 0; pos < stream.size(); ++pos, ++processed) {
      double lr = lr0 * (1.0 - processed / total_words);
      if (lr < lr_floor) lr = lr_floor;

      const int center = stream[pos];
      const int width = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(config.window));
      const std::size_t lo = pos >= static_cast<std::size_t>(width) ? pos - width : 0;
      const std::size_t hi = std::min(stream.size() - 1, pos + width);

      for (std::size_t c = lo; c <= hi; ++c) {
        if (c == pos) continue;
        const int context = stream[c];
        double* v_in = &syn0[static_cast<std::size_t>(context) * D];
        std::fill(grad.begin(), grad.end(), 0.0);

        for (int neg = 0; neg <= config.negatives; ++neg) {
          int target;
          double label;
          if (neg == 0) {
            target = center;
            label = 1.0;
          } else {
            target = noise[rng() % kUnigramTableSize];
            if (target == center) continue;
            label = 0.0;
          }
          double* v_out = &syn1[static_cast<std::size_t>(target) * D];
          double dot = 0.0;
          for (std::size_t d = 0; d < D; ++d) dot += v_in[d] * v_out[d];
          const double g = (label - sigmoid(dot, sig)) * lr;
          for (std::size_t d = 0; d < D; ++d) grad[d] += g * v_out[d];
          for (std::size_t d = 0; d < D; ++d) v_out[d] += g * v_in[d];
        }
        for (std::size_t d = 0; d < D; ++d) v_in[d] += grad[d];
      }
    }
  }

  EmbeddingTable table(D);
  for (std::size_t i = 0; i < V; ++i) {
    std::vector<double> vec(syn0.begin() + static_cast<long>(i * D),
                            syn0.begin() + static_cast<long>((i + 1) * D));
    table.add(vocab[i].first, std::move(vec));
  }
  return table;
}

}  // namespace bookbias::embeddings
