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

#include "bookbias/embeddings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "bookbias/stemmer.hpp"
#include "bookbias/strings.hpp"

namespace bookbias::embeddings {

void EmbeddingTable::add(std::string_view word, std::vector<double> vec) {
  if (word.empty()) throw std::invalid_argument("embedding word must be non-empty");
  if (dimension_ == 0 && words_.empty()) dimension_ = vec.size();
  if (vec.size() != dimension_)
    throw std::invalid_argument("embedding dimension mismatch for '" + std::string(word) +
                                "': expected " + std::to_string(dimension_) + ", got " +
                                std::to_string(vec.size()));
  for (double c : vec) {
    if (!std::isfinite(c))
      throw std::invalid_argument("non-finite component in vector for '" + std::string(word) + "'");
  }
  std::string key(word);
  if (index_.count(key)) throw std::invalid_argument("duplicate embedding word '" + key + "'");
  index_.emplace(key, words_.size());
  words_.push_back(std::move(key));
  vectors_.push_back(std::move(vec));
}

bool EmbeddingTable::contains(std::string_view word) const {
  return index_.find(std::string(word)) != index_.end();
}

const std::vector<double>& EmbeddingTable::vector(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end())
    throw std::out_of_range("word not in embedding table: '" + std::string(word) + "'");
  return vectors_[it->second];
}

namespace {

double parse_component(std::string_view field, const std::string& file, std::size_t line) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(file, line, "non-numeric component '" + std::string(field) + "'");
  if (!std::isfinite(value))
    throw ParseError(file, line, "non-finite component '" + std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open embeddings file: " + path.string());

  const std::string file = path.string();
  std::string line;
  if (!std::getline(in, line)) throw ParseError(file, 1, "empty embeddings file, expected 'V D' header");

  auto header = split_spaces(line);
  std::size_t vocab = 0, dim = 0;
  auto parse_count = [&](std::string_view f, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
    return ec == std::errc() && ptr == f.data() + f.size();
  };
  if (header.size() != 2 || !parse_count(header[0], vocab) || !parse_count(header[1], dim) ||
      vocab == 0 || dim == 0)
    throw ParseError(file, 1, "malformed header, expected 'V D' with positive V and D");

  EmbeddingTable table(dim);
  std::size_t lineno = 1;
  for (std::size_t i = 0; i < vocab; ++i) {
    if (!std::getline(in, line))
      throw ParseError(file, lineno + 1,
                       "unexpected end of file: header promises " + std::to_string(vocab) +
                           " words, found " + std::to_string(i));
    ++lineno;
    auto fields = split_spaces(line);
    if (fields.empty()) throw ParseError(file, lineno, "blank vector line");
    if (fields.size() != dim + 1)
      throw ParseError(file, lineno,
                       "expected 1 word + " + std::to_string(dim) + " components, got " +
                           std::to_string(fields.size()) + " fields");
    std::vector<double> vec(dim);
    for (std::size_t d = 0; d < dim; ++d) vec[d] = parse_component(fields[d + 1], file, lineno);
    if (table.contains(fields[0]))
      throw ParseError(file, lineno, "duplicate word '" + std::string(fields[0]) + "'");
    table.add(fields[0], std::move(vec));
  }
  return table;
}

void save_embeddings(const EmbeddingTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open embeddings file for writing: " + path.string());

  std::vector<std::string> sorted = table.words();
  std::sort(sorted.begin(), sorted.end());

  out << table.size() << ' ' << table.dimension() << '\n';
  char buf[64];
  for (const std::string& word : sorted) {
    out << word;
    for (double c : table.vector(word)) {
      std::snprintf(buf, sizeof buf, " %.6f", c);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failure: " + path.string());
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw std::invalid_argument("cosine: dimension mismatch " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("cosine: zero vector has no direction");
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

std::vector<std::string> preprocess_facts(std::span<const std::string> tokens,
                                          const std::unordered_set<std::string>& dictionary) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& token : tokens) {
    std::string lower = ascii_lower(token);
    if (dictionary.find(lower) == dictionary.end()) continue;
    out.push_back(porter_stem(lower));
  }
  return out;
}

}  // namespace bookbias::embeddings
