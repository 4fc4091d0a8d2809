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

#include "bookbias/analogy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "bookbias/stemmer.hpp"

namespace bookbias::analogy {

using nlohmann::json;

const char* to_string(PairLabel label) {
  return label == PairLabel::GenderSpecific ? "gender-specific" : "gender-neutral";
}

PairLabel pair_label_from_string(std::string_view s) {
  if (s == "gender-specific") return PairLabel::GenderSpecific;
  if (s == "gender-neutral") return PairLabel::GenderNeutral;
  throw std::invalid_argument("unknown pair label '" + std::string(s) + "'");
}

namespace {

const std::vector<double>& require_word(const std::string& word,
                                        const embeddings::EmbeddingTable& table) {
  if (!table.contains(word))
    throw std::invalid_argument("word not in vocabulary: '" + word + "'");
  return table.vector(word);
}

// n(u - v): unit-length difference. Throws if u == v componentwise.
std::vector<double> normalized_difference(const std::vector<double>& u,
                                          const std::vector<double>& v, const std::string& x,
                                          const std::string& y) {
  std::vector<double> d(u.size());
  double norm2 = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d[i] = u[i] - v[i];
    norm2 += d[i] * d[i];
  }
  if (norm2 == 0.0)
    throw std::invalid_argument("zero difference vector for ('" + x + "', '" + y + "')");
  const double norm = std::sqrt(norm2);
  for (double& c : d) c /= norm;
  return d;
}

}  // namespace

double pair_score(const std::string& x, const std::string& y,
                  const embeddings::EmbeddingTable& table) {
  if (x == y) throw std::invalid_argument("pair words must differ, got ('" + x + "', '" + x + "')");
  const auto& vx = require_word(x, table);
  const auto& vy = require_word(y, table);
  const auto& vhe = require_word("he", table);
  const auto& vshe = require_word("she", table);

  const auto axis = normalized_difference(vhe, vshe, "he", "she");
  const auto diff = normalized_difference(vx, vy, x, y);

  double norm2 = 0.0;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double c = axis[i] - diff[i];
    norm2 += c * c;
  }
  return std::sqrt(norm2);
}

Classification classify_pair(const std::string& x, const std::string& y,
                             const embeddings::EmbeddingTable& table, const PairConfig& config) {
  const auto& vx = require_word(x, table);
  const auto& vy = require_word(y, table);
  const auto& vhe = require_word("he", table);
  const auto& vshe = require_word("she", table);

  Classification c;
  c.d_h = 1.0 - embeddings::cosine(vx, vhe);
  c.d_w = 1.0 - embeddings::cosine(vy, vshe);
  c.label = (c.d_h < config.tau1 || c.d_w < config.tau2) ? PairLabel::GenderSpecific
                                                         : PairLabel::GenderNeutral;
  return c;
}

ExtractResult extract_pairs(const embeddings::EmbeddingTable& table,
                            std::span<const std::pair<std::string, std::string>> candidates,
                            const PairConfig& config) {
  ExtractResult result;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [x, y] : candidates) {
    if (!seen.insert({x, y}).second) {
      result.rejections.push_back({x, y, "duplicate candidate"});
      continue;
    }
    try {
      AnalogicalPair pair;
      pair.x = x;
      pair.y = y;
      pair.score = pair_score(x, y, table);
      const Classification c = classify_pair(x, y, table, config);
      pair.d_h = c.d_h;
      pair.d_w = c.d_w;
      pair.label = c.label;
      if (pair.score <= config.tau) result.pairs.push_back(std::move(pair));
    } catch (const std::exception& e) {
      result.rejections.push_back({x, y, e.what()});
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const AnalogicalPair& a, const AnalogicalPair& b) {
              if (a.score != b.score) return a.score < b.score;
              if (a.x != b.x) return a.x < b.x;
              return a.y < b.y;
            });
  return result;
}

const std::unordered_set<std::string>& builtin_stopwords() {
  static const std::unordered_set<std::string>* set = [] {
    auto* s = new std::unordered_set<std::string>;
    for (const char* w :
         {"the", "a",    "an",   "and",  "or",    "but", "of",   "in",   "on",    "at",   "to",
          "for", "with", "from", "by",   "as",    "is",  "am",   "are",  "was",   "were", "be",
          "been", "being", "do",  "does", "did",  "have", "has", "had",  "will",  "would", "shall",
          "should", "can", "could", "may", "might", "must", "not", "no",  "nor",  "so",   "if",
          "then", "than", "that", "this", "these", "those", "there", "here", "when", "where",
          "while", "which", "what", "who", "whom", "whose", "how", "why", "it", "its", "i",
          "me", "my", "we", "us", "our", "you", "your", "they", "them", "their", "up", "down",
          "out", "into", "over", "under", "again", "once", "very", "too", "also", "just",
          "about", "after", "before", "between", "through", "during", "above", "below", "because",
          "each", "few", "more", "most", "other", "some", "such", "only", "own", "same", "both",
          "any", "all"}) {
      s->insert(w);
      s->insert(porter_stem(w));  // trained vocabularies hold stems
    }
    return s;
  }();
  return *set;
}

std::vector<std::pair<std::string, std::string>> default_candidates(
    const embeddings::EmbeddingTable& table, std::size_t top_n,
    const std::unordered_set<std::string>* stopwords) {
  const std::unordered_set<std::string>& stop = stopwords ? *stopwords : builtin_stopwords();
  std::vector<std::string> kept;
  for (const std::string& w : table.words()) {
    if (kept.size() >= top_n) break;
    if (stop.find(w) == stop.end()) kept.push_back(w);
  }
  std::vector<std::pair<std::string, std::string>> out;
  if (kept.size() >= 2) out.reserve(kept.size() * (kept.size() - 1));
  for (const std::string& x : kept)
    for (const std::string& y : kept)
      if (x != y) out.emplace_back(x, y);
  return out;
}

void save_kb(const KnowledgeBase& kb, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open knowledge base for writing: " + path.string());

  json prov = {{"record", "provenance"},
               {"embeddings", kb.provenance.embeddings_path},
               {"vocabulary", kb.provenance.vocabulary},
               {"dimension", kb.provenance.dimension},
               {"content_hash", kb.provenance.content_hash},
               {"tau", kb.provenance.config.tau},
               {"tau1", kb.provenance.config.tau1},
               {"tau2", kb.provenance.config.tau2},
               {"version", kb.provenance.version}};
  out << prov.dump() << '\n';
  for (const AnalogicalPair& p : kb.pairs) {
    json rec = {{"record", "pair"}, {"x", p.x},     {"y", p.y},
                {"score", p.score}, {"d_h", p.d_h}, {"d_w", p.d_w},
                {"label", to_string(p.label)}};
    out << rec.dump() << '\n';
  }
  if (!out) throw std::runtime_error("write failure: " + path.string());
}

namespace {

json parse_record(const std::string& line, const std::string& file, std::size_t lineno) {
  json rec;
  try {
    rec = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(file, lineno, std::string("malformed record: ") + e.what());
  }
  if (!rec.is_object()) throw ParseError(file, lineno, "record must be a JSON object");
  return rec;
}

template <typename T>
T field(const json& rec, const char* key, const std::string& file, std::size_t lineno) {
  if (!rec.contains(key))
    throw ParseError(file, lineno, std::string("missing field '") + key + "'");
  try {
    return rec.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(file, lineno, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

KnowledgeBase load_kb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open knowledge base: " + path.string());

  const std::string file = path.string();
  KnowledgeBase kb;
  std::set<std::pair<std::string, std::string>> seen;
  bool have_provenance = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec = parse_record(line, file, lineno);
    const std::string kind = field<std::string>(rec, "record", file, lineno);
    if (kind == "provenance") {
      if (have_provenance) throw ParseError(file, lineno, "second provenance record");
      kb.provenance.embeddings_path = field<std::string>(rec, "embeddings", file, lineno);
      kb.provenance.vocabulary = field<std::size_t>(rec, "vocabulary", file, lineno);
      kb.provenance.dimension = field<std::size_t>(rec, "dimension", file, lineno);
      kb.provenance.content_hash = field<std::string>(rec, "content_hash", file, lineno);
      kb.provenance.config.tau = field<double>(rec, "tau", file, lineno);
      kb.provenance.config.tau1 = field<double>(rec, "tau1", file, lineno);
      kb.provenance.config.tau2 = field<double>(rec, "tau2", file, lineno);
      kb.provenance.version = field<std::string>(rec, "version", file, lineno);
      have_provenance = true;
    } else if (kind == "pair") {
      if (!have_provenance)
        throw ParseError(file, lineno, "pair record before the provenance record");
      AnalogicalPair p;
      p.x = field<std::string>(rec, "x", file, lineno);
      p.y = field<std::string>(rec, "y", file, lineno);
      p.score = field<double>(rec, "score", file, lineno);
      p.d_h = field<double>(rec, "d_h", file, lineno);
      p.d_w = field<double>(rec, "d_w", file, lineno);
      try {
        p.label = pair_label_from_string(field<std::string>(rec, "label", file, lineno));
      } catch (const std::invalid_argument& e) {
        throw ParseError(file, lineno, e.what());
      }
      if (!seen.insert({p.x, p.y}).second)
        throw ParseError(file, lineno, "duplicate pair ('" + p.x + "', '" + p.y + "')");
      kb.pairs.push_back(std::move(p));
    } else {
      throw ParseError(file, lineno, "unknown record type '" + kind + "'");
    }
  }
  if (!have_provenance)
    throw ParseError(file, lineno == 0 ? 1 : lineno, "missing provenance record");
  return kb;
}

}  // namespace bookbias::analogy
