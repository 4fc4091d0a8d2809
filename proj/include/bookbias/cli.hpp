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
#include <string>

namespace bookbias::cli {

// Everything a subcommand run depends on; echoed into report headers so any
// output can be reproduced. Paths stay as given on the command line.
struct RunConfig {
  std::string command;

  std::string corpus;
  std::string census;
  std::string occupations;
  std::string dictionary;
  std::string embeddings;
  std::string kb;
  std::string input;        // document file for debias
  std::string out;
  std::string tags;
  std::string abbreviations;
  std::string candidates;   // optional CSV of candidate pairs
  std::string train_corpus; // plain-text corpus for the trainer

  double tau = 0.7;
  double tau1 = 0.35;
  double tau2 = 0.35;
  double epsilon = -1.0;    // < 0 means "use the default rule"
  std::uint64_t seed = 42;
  int topk = 20;
  int jobs = 1;
  int topn = 2000;          // vocabulary prefix for default candidates
  int pronoun_window = 3;

  // trainer hyperparameters
  int dim = 100;
  int window = 5;
  int negatives = 5;
  int epochs = 5;
  int min_count = 5;
  double learning_rate = 0.025;

  std::string echo() const;  // deterministic "key=value" line (out path excluded)
};

// Subcommand entry points. Diagnostics go to stderr; the exit code is 0
// only when no error occurred.
int cmd_ingest(const RunConfig& config);
int cmd_analyze(const RunConfig& config);
int cmd_pairs(const RunConfig& config);
int cmd_train(const RunConfig& config);
int cmd_debias(const RunConfig& config);

}  // namespace bookbias::cli
