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

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bookbias/cli.hpp"
#include "bookbias/types.hpp"

int main(int argc, char** argv) {
  using bookbias::cli::RunConfig;
  RunConfig config;

  CLI::App app{"bookbias: corpus gender-representation analytics and text de-biasing"};
  app.set_version_flag("--version", std::string("bookbias ") + bookbias::kVersion);
  app.set_config("--config", "", "Read default flag values from an INI/TOML file");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", config.corpus, "Book corpus JSONL file");
    cmd->add_option("--census", config.census, "Name-gender census CSV (name,gender,frequency)");
    cmd->add_option("--occupations", config.occupations, "Occupation lexicon CSV (term,level)");
    cmd->add_option("--dictionary", config.dictionary, "Dictionary wordlist, one word per line");
    cmd->add_option("--embeddings", config.embeddings, "Embedding table in word2vec text format");
    cmd->add_option("--kb", config.kb, "Knowledge-base JSONL file");
    cmd->add_option("--input", config.input, "Input text document");
    cmd->add_option("--out", config.out, "Output directory");
    cmd->add_option("--tags", config.tags, "Tag lexicon CSV (word,tag)");
    cmd->add_option("--abbreviations", config.abbreviations,
                    "Abbreviation list, one per line, for sentence splitting");
    cmd->add_option("--candidates", config.candidates, "Candidate pair CSV (x,y)");
    cmd->add_option("--train-corpus", config.train_corpus, "Plain-text training corpus");
    cmd->add_option("--tau", config.tau, "Analogy acceptance threshold");
    cmd->add_option("--tau1", config.tau1, "Gender-specific cutoff toward 'he'");
    cmd->add_option("--tau2", config.tau2, "Gender-specific cutoff toward 'she'");
    cmd->add_option("--epsilon", config.epsilon,
                    "Centrality-match tolerance (negative = auto: 25% of max centrality)");
    cmd->add_option("--seed", config.seed, "Random seed for training");
    cmd->add_option("--topk", config.topk, "Top-K terms per gender in reports");
    cmd->add_option("--jobs", config.jobs, "Parallel workers for per-book analysis");
    cmd->add_option("--topn", config.topn, "Vocabulary prefix size for default candidates");
    cmd->add_option("--pronoun-window", config.pronoun_window,
                    "Sentence lookback for pronoun resolution");
    cmd->add_option("--dim", config.dim, "Embedding dimension");
    cmd->add_option("--window", config.window, "Context window size");
    cmd->add_option("--negatives", config.negatives, "Negative samples per pair");
    cmd->add_option("--epochs", config.epochs, "Training epochs");
    cmd->add_option("--min-count", config.min_count, "Minimum word count for the vocabulary");
    cmd->add_option("--learning-rate", config.learning_rate, "Initial learning rate");
    cmd->fallthrough();
    return cmd;
  };

  CLI::App* ingest =
      add_common(app.add_subcommand("ingest", "Validate a corpus file and print a summary"));
  CLI::App* analyze =
      add_common(app.add_subcommand("analyze", "Run corpus analytics and emit reports"));
  CLI::App* pairs = add_common(
      app.add_subcommand("pairs", "Extract analogical pairs into a knowledge base"));
  CLI::App* train =
      add_common(app.add_subcommand("train", "Train skip-gram embeddings from a text corpus"));
  CLI::App* debias = add_common(
      app.add_subcommand("debias", "Detect biased assignments and rewrite a document"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (ingest->parsed()) config.command = "ingest";
  if (analyze->parsed()) config.command = "analyze";
  if (pairs->parsed()) config.command = "pairs";
  if (train->parsed()) config.command = "train";
  if (debias->parsed()) config.command = "debias";

  if (config.command == "ingest") return bookbias::cli::cmd_ingest(config);
  if (config.command == "analyze") return bookbias::cli::cmd_analyze(config);
  if (config.command == "pairs") return bookbias::cli::cmd_pairs(config);
  if (config.command == "train") return bookbias::cli::cmd_train(config);
  if (config.command == "debias") return bookbias::cli::cmd_debias(config);

  std::cerr << "error: no subcommand given\n";
  return 2;
}
