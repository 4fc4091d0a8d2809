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

#include "bookbias/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "bookbias/analogy.hpp"
#include "bookbias/analysis.hpp"
#include "bookbias/corpus.hpp"
#include "bookbias/debias.hpp"
#include "bookbias/embeddings.hpp"
#include "bookbias/graph.hpp"
#include "bookbias/stemmer.hpp"
#include "bookbias/strings.hpp"
#include "bookbias/textproc.hpp"
#include "bookbias/types.hpp"

namespace bookbias::cli {

namespace fs = std::filesystem;

namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 2;
}

int failure(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 1;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failure: " + path.string());
}

std::vector<std::string> whitespace_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    // strip surrounding punctuation so "doctor." trains as "doctor"
    std::size_t b = 0, e = token.size();
    while (b < e && !std::isalnum(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && !std::isalnum(static_cast<unsigned char>(token[e - 1]))) --e;
    if (e > b) tokens.push_back(token.substr(b, e - b));
  }
  return tokens;
}

// Corpus words ready for training: lowercased, optionally dictionary-
// filtered, stemmed.
std::vector<std::string> training_words(const std::string& text, const std::string& dictionary) {
  std::vector<std::string> tokens = whitespace_tokens(text);
  if (!dictionary.empty()) {
    auto words = corpus::load_wordlist(dictionary);
    return embeddings::preprocess_facts(tokens, words);
  }
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(stem(ascii_lower(t)));
  return out;
}

std::vector<std::pair<std::string, std::string>> load_candidates(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open candidate file: " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (lineno == 1 && normalize_spaces(line) == "x,y") continue;  // header row
    auto fields = split(line, ',');
    if (fields.size() != 2)
      throw ParseError(path.string(), lineno,
                       "expected 2 fields x,y, got " + std::to_string(fields.size()));
    std::string x(trim_view(fields[0])), y(trim_view(fields[1]));
    if (x.empty() || y.empty()) throw ParseError(path.string(), lineno, "empty candidate word");
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

analysis::AnalysisContext make_context(const RunConfig& config,
                                       const corpus::NameCensus& census,
                                       const corpus::OccupationLexicon* occupations) {
  analysis::AnalysisContext ctx;
  ctx.census = &census;
  ctx.occupations = occupations;
  ctx.lexicon = config.tags.empty() ? textproc::TagLexicon::core()
                                    : textproc::TagLexicon::load(config.tags);
  if (!config.abbreviations.empty())
    ctx.abbreviations = textproc::AbbreviationSet::load(config.abbreviations);
  ctx.coref.pronoun_window = config.pronoun_window;
  return ctx;
}

}  // namespace

std::string RunConfig::echo() const {
  std::ostringstream out;
  out << "cmd=" << command;
  auto path = [&](const char* key, const std::string& value) {
    if (!value.empty()) out << ' ' << key << '=' << value;
  };
  // --out is deliberately not echoed: reports must not depend on where they
  // are written.
  path("corpus", corpus);
  path("census", census);
  path("occupations", occupations);
  path("dictionary", dictionary);
  path("embeddings", embeddings);
  path("kb", kb);
  path("input", input);
  path("tags", tags);
  path("abbreviations", abbreviations);
  path("candidates", candidates);
  path("train_corpus", train_corpus);
  out << " tau=" << fixed4(tau) << " tau1=" << fixed4(tau1) << " tau2=" << fixed4(tau2);
  out << " epsilon=" << (epsilon < 0.0 ? std::string("auto") : fixed4(epsilon));
  out << " seed=" << seed << " topk=" << topk << " jobs=" << jobs << " topn=" << topn
      << " pronoun_window=" << pronoun_window;
  out << " dim=" << dim << " window=" << window << " negatives=" << negatives
      << " epochs=" << epochs << " min_count=" << min_count << " lr=" << fixed4(learning_rate);
  return out.str();
}

int cmd_ingest(const RunConfig& config) {
  if (config.corpus.empty()) return usage_error("--corpus is required");
  try {
    const auto records = corpus::parse_corpus(config.corpus);

    std::ostringstream summary;
    if (records.empty()) {
      summary << "0 records";
    } else {
      int lo = records.front().year, hi = records.front().year;
      for (const auto& r : records) {
        lo = std::min(lo, r.year);
        hi = std::max(hi, r.year);
      }
      summary << records.size() << " records, years " << lo << '-' << hi;
    }
    std::cout << summary.str() << '\n';

    if (!config.out.empty()) {
      fs::create_directories(config.out);
      corpus::save_corpus(records, fs::path(config.out) / "corpus.jsonl");
      write_file(fs::path(config.out) / "ingest_summary.txt", summary.str() + "\n");
    }
    return 0;
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

int cmd_analyze(const RunConfig& config) {
  if (config.corpus.empty()) return usage_error("--corpus is required");
  if (config.census.empty()) return usage_error("--census is required");
  if (config.occupations.empty()) return usage_error("--occupations is required");
  if (config.out.empty()) return usage_error("--out is required");
  try {
    const auto records = corpus::parse_corpus(config.corpus);
    const auto census = corpus::load_census(config.census);
    const auto occupations = corpus::load_occupations(config.occupations);
    const auto ctx = make_context(config, census, &occupations);

    const auto result = analysis::analyze_corpus(records, ctx, config.jobs);

    analysis::EmitConfig emit;
    emit.out_dir = config.out;
    emit.top_k = config.topk;
    emit.config_echo = config.echo();
    const auto files = analysis::emit_reports(result, emit);

    std::cout << records.size() << " books analyzed, " << files.size() << " report files\n";
    return 0;
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

int cmd_pairs(const RunConfig& config) {
  if (config.kb.empty()) return usage_error("--kb is required");
  if (config.embeddings.empty() && config.train_corpus.empty())
    return usage_error("--embeddings or --train-corpus is required");
  try {
    embeddings::EmbeddingTable table;
    std::string source_path;
    if (!config.embeddings.empty()) {
      table = embeddings::load_embeddings(config.embeddings);
      source_path = config.embeddings;
    } else {
      embeddings::TrainConfig tc;
      tc.dimension = static_cast<std::size_t>(config.dim);
      tc.window = config.window;
      tc.negatives = config.negatives;
      tc.epochs = config.epochs;
      tc.learning_rate = config.learning_rate;
      tc.min_count = config.min_count;
      tc.seed = config.seed;
      table = embeddings::train_skipgram(training_words(read_file(config.train_corpus),
                                                        config.dictionary),
                                         tc);
      source_path = config.train_corpus;
    }

    if (!table.contains("he") || !table.contains("she"))
      return failure("vocabulary must contain both 'he' and 'she' to anchor the gender axis");

    const analogy::PairConfig pc{config.tau, config.tau1, config.tau2};
    std::vector<std::pair<std::string, std::string>> candidates;
    if (!config.candidates.empty())
      candidates = load_candidates(config.candidates);
    else
      candidates = analogy::default_candidates(table, static_cast<std::size_t>(config.topn));

    const auto extracted = analogy::extract_pairs(table, candidates, pc);

    analogy::KnowledgeBase kb;
    kb.provenance.embeddings_path = source_path;
    kb.provenance.vocabulary = table.size();
    kb.provenance.dimension = table.dimension();
    kb.provenance.content_hash = fnv1a64_hex(read_file(source_path));
    kb.provenance.config = pc;
    kb.pairs = extracted.pairs;
    analogy::save_kb(kb, config.kb);

    std::ostringstream rejects;
    for (const auto& r : extracted.rejections)
      rejects << r.x << ',' << r.y << ": " << r.reason << '\n';
    write_file(config.kb + ".rejects", rejects.str());

    std::cout << extracted.pairs.size() << " pairs, " << extracted.rejections.size()
              << " rejections\n";
    return 0;
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

int cmd_train(const RunConfig& config) {
  if (config.train_corpus.empty()) return usage_error("--train-corpus is required");
  if (config.embeddings.empty())
    return usage_error("--embeddings is required (destination for the trained table)");
  try {
    embeddings::TrainConfig tc;
    tc.dimension = static_cast<std::size_t>(config.dim);
    tc.window = config.window;
    tc.negatives = config.negatives;
    tc.epochs = config.epochs;
    tc.learning_rate = config.learning_rate;
    tc.min_count = config.min_count;
    tc.seed = config.seed;

    const auto table =
        embeddings::train_skipgram(training_words(read_file(config.train_corpus),
                                                  config.dictionary),
                                   tc);
    embeddings::save_embeddings(table, config.embeddings);
    std::cout << table.size() << " words trained, dimension " << table.dimension() << '\n';
    return 0;
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

int cmd_debias(const RunConfig& config) {
  if (config.input.empty()) return usage_error("--input is required");
  if (config.kb.empty()) return usage_error("--kb is required");
  if (config.census.empty()) return usage_error("--census is required");
  if (config.out.empty()) return usage_error("--out is required");
  try {
    const auto kb = analogy::load_kb(config.kb);
    const auto census = corpus::load_census(config.census);

    corpus::OccupationLexicon occupations;
    const bool have_occupations = !config.occupations.empty();
    if (have_occupations) occupations = corpus::load_occupations(config.occupations);
    const auto ctx = make_context(config, census, have_occupations ? &occupations : nullptr);

    const std::string text = read_file(config.input);
    const auto doc = analysis::analyze_document(text, ctx);

    auto g = graph::build_graph(doc.triples, doc.coref, doc.tagged);
    graph::compute_betweenness(g);
    const double epsilon =
        config.epsilon >= 0.0 ? config.epsilon : graph::default_epsilon(g);

    const auto findings = debias::detect_bias(doc, kb);
    const auto rewritten = debias::rewrite(doc, findings, g, epsilon);

    fs::create_directories(config.out);
    const fs::path out_dir(config.out);
    write_file(out_dir / "debiased.txt", rewritten.text);

    std::ostringstream findings_log;
    for (const auto& f : findings) {
      nlohmann::json rec = {{"character", f.character},
                            {"gender", to_string(f.gender)},
                            {"term", f.term},
                            {"pair_x", f.kb_pair.x},
                            {"pair_y", f.kb_pair.y},
                            {"label", analogy::to_string(f.kb_pair.label)},
                            {"slot", std::string(1, f.slot)},
                            {"begin", f.begin},
                            {"end", f.end},
                            {"source", f.source}};
      findings_log << rec.dump() << '\n';
    }
    write_file(out_dir / "findings.jsonl", findings_log.str());

    std::ostringstream edits_log;
    for (const auto& e : rewritten.edits) {
      nlohmann::json rec = {{"begin", e.begin},
                            {"end", e.end},
                            {"original", e.original},
                            {"replacement", e.replacement},
                            {"reason", debias::to_string(e.reason)}};
      edits_log << rec.dump() << '\n';
    }
    write_file(out_dir / "edits.jsonl", edits_log.str());

    write_file(out_dir / "explain.txt",
               debias::explain(findings, rewritten.edits, rewritten.skipped, kb, epsilon));

    std::ostringstream graph_text;
    graph::export_graph(g, graph_text);
    write_file(out_dir / "graph.txt", graph_text.str());

    std::cout << findings.size() << " findings, " << rewritten.edits.size() << " edits\n";
    return 0;
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

}  // namespace bookbias::cli
