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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bookbias/corpus.hpp"
#include "bookbias/graph.hpp"
#include "bookbias/textproc.hpp"
#include "bookbias/types.hpp"

namespace bookbias::analysis {

struct MentionStats {
  int male_name = 0;
  int male_pronoun = 0;
  int female_name = 0;
  int female_pronoun = 0;
  int unknown = 0;  // mentions of entities whose gender is unresolved

  int male_total() const { return male_name + male_pronoun; }
  int female_total() const { return female_name + female_pronoun; }
  int total() const { return male_total() + female_total() + unknown; }
};

// Name and pronoun mentions tallied separately per gender; anonymous
// gendered pronouns count toward the pronoun columns.
MentionStats count_mentions(const textproc::CorefResult& coref);

// Stemmed term -> occurrence count, one map per gender.
struct AssociationProfile {
  std::map<std::string, int> counts;
  int total() const;
};

struct GenderProfiles {
  AssociationProfile male;
  AssociationProfile female;
};

// An adjective associates to an entity when it immediately precedes one of
// the entity's mentions, or follows a be-form copula whose subject is the
// mention, within one sentence.
GenderProfiles adjective_profile(const textproc::TaggedDocument& doc,
                                 const textproc::CorefResult& coref);

// Each triple's verb lemma is credited to its subject's gender.
GenderProfiles verb_profile(std::span<const textproc::SvoTriple> triples,
                            const textproc::CorefResult& coref);

// One occupation-term occurrence attached to an entity.
struct OccupationHit {
  int entity_index = -1;
  std::string term;  // lexicon form (lowercase, single-spaced)
  int level = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  int sentence_index = 0;
};

// Finds lexicon terms appearing as Nouns (multiword terms matched greedily,
// longest first) and attaches each occurrence to the entity of the nearest
// mention in the same sentence. Unattachable occurrences are dropped.
std::vector<OccupationHit> find_occupation_hits(const textproc::TaggedDocument& doc,
                                                const textproc::CorefResult& coref,
                                                const corpus::OccupationLexicon& lexicon);

struct OccupationSide {
  std::map<std::string, int> counts;  // term -> occurrences
  std::map<std::string, int> levels;  // term -> lexicon level
  long long level_sum = 0;
  int occurrences = 0;
  double mean_level() const { return occurrences ? double(level_sum) / occurrences : 0.0; }
};

struct OccupationStats {
  OccupationSide male;
  OccupationSide female;
};

OccupationStats occupation_stats(std::span<const OccupationHit> hits,
                                 const textproc::CorefResult& coref);

struct CentralCharacter {
  bool found = false;
  std::string name;
  GenderLabel gender = GenderLabel::Unknown;
  int mentions = 0;
};

// Most-mentioned entity; ties break by betweenness centrality, then by
// lexicographically smaller name. Requires centrality to be computed.
CentralCharacter central_character(const textproc::CorefResult& coref,
                                   const graph::CharacterGraph& graph);

// Shared inputs for running the text pipeline.
struct AnalysisContext {
  const corpus::NameCensus* census = nullptr;
  const corpus::OccupationLexicon* occupations = nullptr;  // may be null
  textproc::TagLexicon lexicon;
  textproc::AbbreviationSet abbreviations;
  textproc::CorefOptions coref;
};

// Full per-document pipeline output, kept at span level for the rewriter.
struct DocumentAnalysis {
  textproc::TaggedDocument tagged;
  textproc::CorefResult coref;
  std::vector<textproc::SvoTriple> triples;
  std::vector<OccupationHit> occupation_hits;
};

DocumentAnalysis analyze_document(const std::string& text, const AnalysisContext& ctx);

// Per-book rollup (the document detail is not retained at corpus scale).
struct BookAnalysis {
  std::string id;
  int year = 0;
  MentionStats mentions;
  GenderProfiles adjectives;
  GenderProfiles verbs;
  OccupationStats occupations;
  CentralCharacter central;
};

BookAnalysis analyze_book(const corpus::BookRecord& record, const AnalysisContext& ctx);

struct YearMentionMeans {
  int books = 0;
  double male_name = 0, male_pronoun = 0, male_total = 0;
  double female_name = 0, female_pronoun = 0, female_total = 0;
  double unknown = 0;
  long long male_sum = 0, female_sum = 0;  // for the ratio
};

struct CorpusAnalysis {
  std::vector<BookAnalysis> books;  // corpus order
  std::map<int, YearMentionMeans> mentions_by_year;
  GenderProfiles adjectives;  // merged
  GenderProfiles verbs;       // merged
  OccupationStats occupations;
  std::map<int, corpus::YearGenderCounts> authors_by_year;
};

// jobs > 1 analyzes books concurrently; aggregation stays in corpus order,
// so the result is identical at any parallelism.
CorpusAnalysis analyze_corpus(std::span<const corpus::BookRecord> records,
                              const AnalysisContext& ctx, int jobs = 1);

struct EmitConfig {
  std::filesystem::path out_dir;
  int top_k = 20;
  std::string config_echo;  // reproduced verbatim in every report header
};

// Writes the CSV report set plus summary.json. Deterministic: identical
// analyses and config produce byte-identical files.
std::vector<std::filesystem::path> emit_reports(const CorpusAnalysis& analysis,
                                                const EmitConfig& config);

}  // namespace bookbias::analysis
