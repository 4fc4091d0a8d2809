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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bookbias/corpus.hpp"
#include "bookbias/types.hpp"

namespace bookbias::textproc {

// A token with its exact byte span in the source text. Concatenating the
// spans (plus the bytes between them) reconstructs the input byte for byte.
struct Token {
  std::string surface;
  std::string lowercase;
  int sentence_index = 0;
  int token_index = 0;   // position within its sentence
  std::size_t begin = 0; // byte offset, inclusive
  std::size_t end = 0;   // byte offset, exclusive
};

enum class Tag {
  Noun,
  ProperNoun,
  Verb,
  Adjective,
  PronounMale,
  PronounFemale,
  PronounOther,
  Determiner,
  Other,
};

const char* to_string(Tag t);

struct TaggedToken {
  Token token;
  Tag tag = Tag::Other;
};

struct Document {
  std::string text;
  std::vector<std::vector<Token>> sentences;
};

struct TaggedDocument {
  std::string text;
  std::vector<std::vector<TaggedToken>> sentences;
};

// Abbreviations that suppress a sentence break after "." ("Dr.", "Mr.").
// Stored lowercase without the trailing period.
class AbbreviationSet {
 public:
  AbbreviationSet() = default;
  void add(std::string_view abbrev);
  bool contains(std::string_view lower_word) const;
  static AbbreviationSet load(const std::filesystem::path& path);

 private:
  std::unordered_set<std::string> words_;
};

// Word -> tag table for the closed-vocabulary part of tagging. Pronouns and
// a handful of core function words (the/a/an, be-forms) are built in; the
// rest comes from a CSV file with rows "word,tag".
class TagLexicon {
 public:
  static TagLexicon core();  // built-in entries only
  static TagLexicon load(const std::filesystem::path& path);  // core + file

  void add(std::string_view word, Tag tag);
  std::optional<Tag> find(std::string_view lower_word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, Tag> entries_;
};

// Splits text into sentences of tokens. Sentences end at . ! ? followed by
// whitespace and a capital letter (or end of input); a "." directly after a
// known abbreviation never ends a sentence. Spans are exact byte offsets.
Document tokenize(std::string_view text, const AbbreviationSet& abbreviations = {});

// Rule-based tagging: closed-class pronouns first, then lexicon lookup of
// the lowercased surface, then ProperNoun for capitalized unknown words,
// then suffix rules (-ly Other; -ed/-ing Verb; -ous/-ful/-ive Adjective),
// defaulting to Noun. Punctuation tags as Other.
std::vector<TaggedToken> pos_tag(const std::vector<Token>& sentence, const TagLexicon& lexicon);

TaggedDocument tag_document(const Document& doc, const TagLexicon& lexicon);

struct Mention {
  enum class Kind { Name, Pronoun };
  std::size_t begin = 0;
  std::size_t end = 0;
  Kind kind = Kind::Name;
  std::string surface;
  int sentence_index = 0;
};

struct CharacterEntity {
  std::string canonical_name;  // forename as first seen
  GenderLabel gender = GenderLabel::Unknown;
  std::vector<Mention> mentions;  // in text order
};

// A gendered pronoun that no entity could claim.
struct AnonymousMention {
  Mention mention;
  GenderLabel gender = GenderLabel::Unknown;
};

struct CorefResult {
  std::vector<CharacterEntity> entities;  // in order of first appearance
  std::vector<AnonymousMention> anonymous;
  std::size_t total_mentions() const;
};

struct CorefOptions {
  int pronoun_window = 3;  // max sentence distance a pronoun may reach back
};

// Heuristic coreference: runs of ProperNouns become name mentions of an
// entity keyed by forename (gender from the census); he/him/his and
// she/her/hers attach to the nearest preceding same-gender entity within
// the sentence window, otherwise they are recorded as anonymous mentions.
CorefResult resolve_coreference(const TaggedDocument& doc, const corpus::NameCensus& census,
                                const CorefOptions& options = {});

struct SvoTriple {
  int entity_index = -1;      // subject, into CorefResult::entities
  std::string verb_lemma;     // stemmed lowercase verb
  std::string object_lemma;   // stemmed lowercase object, empty if none
  int sentence_index = 0;
  std::size_t verb_begin = 0;
  std::size_t verb_end = 0;
  std::size_t object_begin = 0;
  std::size_t object_end = 0;
  bool has_object() const { return !object_lemma.empty(); }
};

// Adjacency-pattern extraction: for every Verb token whose sentence has a
// preceding entity mention, that nearest mention is the subject and the
// first Noun/ProperNoun token after the verb (if any) is the object.
std::vector<SvoTriple> extract_svo(const TaggedDocument& doc, const CorefResult& coref);

}  // namespace bookbias::textproc
