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

#include "bookbias/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_map>

#include "bookbias/stemmer.hpp"
#include "bookbias/strings.hpp"

namespace bookbias::textproc {

const char* to_string(Tag t) {
  switch (t) {
    case Tag::Noun: return "noun";
    case Tag::ProperNoun: return "proper-noun";
    case Tag::Verb: return "verb";
    case Tag::Adjective: return "adjective";
    case Tag::PronounMale: return "pronoun-male";
    case Tag::PronounFemale: return "pronoun-female";
    case Tag::PronounOther: return "pronoun-other";
    case Tag::Determiner: return "determiner";
    default: return "other";
  }
}

void AbbreviationSet::add(std::string_view abbrev) {
  std::string w = ascii_lower(trim_view(abbrev));
  if (!w.empty() && w.back() == '.') w.pop_back();
  if (!w.empty()) words_.insert(std::move(w));
}

bool AbbreviationSet::contains(std::string_view lower_word) const {
  return words_.find(std::string(lower_word)) != words_.end();
}

AbbreviationSet AbbreviationSet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open abbreviation list: " + path.string());
  AbbreviationSet set;
  std::string line;
  while (std::getline(in, line)) set.add(line);
  return set;
}

namespace {

Tag tag_from_name(const std::string& name, const std::string& file, std::size_t line) {
  std::string t = ascii_lower(name);
  if (t == "noun") return Tag::Noun;
  if (t == "verb") return Tag::Verb;
  if (t == "adjective" || t == "adj") return Tag::Adjective;
  if (t == "determiner" || t == "det") return Tag::Determiner;
  if (t == "other") return Tag::Other;
  throw ParseError(file, line, "unknown tag '" + name + "'");
}

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c >= 0x80;
}

}  // namespace

TagLexicon TagLexicon::core() {
  TagLexicon lex;
  for (const char* w : {"the", "a", "an"}) lex.add(w, Tag::Determiner);
  for (const char* w : {"is", "am", "are", "was", "were", "be", "been", "being"})
    lex.add(w, Tag::Verb);
  return lex;
}

TagLexicon TagLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open tag lexicon: " + path.string());

  const std::string file = path.string();
  TagLexicon lex = core();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    auto fields = split(line, ',');
    for (auto& f : fields) f = std::string(trim_view(f));
    if (lineno == 1 && fields.size() == 2 && ascii_lower(fields[0]) == "word" &&
        ascii_lower(fields[1]) == "tag")
      continue;  // header row
    if (fields.size() != 2)
      throw ParseError(file, lineno, "expected 2 fields word,tag, got " + std::to_string(fields.size()));
    if (fields[0].empty()) throw ParseError(file, lineno, "empty word");
    lex.add(fields[0], tag_from_name(fields[1], file, lineno));
  }
  return lex;
}

void TagLexicon::add(std::string_view word, Tag tag) {
  entries_[ascii_lower(word)] = tag;
}

std::optional<Tag> TagLexicon::find(std::string_view lower_word) const {
  auto it = entries_.find(std::string(lower_word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Document tokenize(std::string_view text, const AbbreviationSet& abbreviations) {
  Document doc;
  doc.text = std::string(text);

  std::vector<std::vector<Token>> sentences;
  std::vector<Token> current;
  std::string last_word_lower;  // most recent word token of the open sentence

  auto flush = [&] {
    if (!current.empty()) {
      sentences.push_back(std::move(current));
      current.clear();
    }
    last_word_lower.clear();
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const bool word = is_word_byte(c);
    if (word) {
      ++i;
      while (i < n) {
        unsigned char d = text[i];
        if (is_word_byte(d)) {
          ++i;
        } else if (d == '\'' && i + 1 < n && is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
          i += 2;  // keep internal apostrophes ("didn't") inside the token
        } else {
          break;
        }
      }
    } else {
      ++i;  // punctuation: one byte per token
    }

    Token t;
    t.surface = std::string(text.substr(start, i - start));
    t.lowercase = ascii_lower(t.surface);
    t.begin = start;
    t.end = i;
    current.push_back(std::move(t));

    bool boundary = false;
    const std::string& surf = current.back().surface;
    if (!word && (surf == "." || surf == "!" || surf == "?")) {
      bool abbreviation = surf == "." && !last_word_lower.empty() &&
                          abbreviations.contains(last_word_lower);
      if (!abbreviation) {
        // A break needs whitespace and then a capital (or end of input).
        std::size_t j = i;
        bool saw_space = false;
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) {
          saw_space = true;
          ++j;
        }
        if (j >= n)
          boundary = true;
        else if (saw_space && text[j] >= 'A' && text[j] <= 'Z')
          boundary = true;
      }
    }
    if (word) last_word_lower = current.back().lowercase;
    if (boundary) flush();
  }
  flush();

  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (std::size_t k = 0; k < sentences[s].size(); ++k) {
      sentences[s][k].sentence_index = static_cast<int>(s);
      sentences[s][k].token_index = static_cast<int>(k);
    }
  }
  doc.sentences = std::move(sentences);
  return doc;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_word_token(const Token& t) {
  return !t.surface.empty() && is_word_byte(static_cast<unsigned char>(t.surface.front()));
}

Tag suffix_tag(std::string_view lower) {
  if (ends_with(lower, "ly")) return Tag::Other;
  if (ends_with(lower, "ed") || ends_with(lower, "ing")) return Tag::Verb;
  if (ends_with(lower, "ous") || ends_with(lower, "ful") || ends_with(lower, "ive"))
    return Tag::Adjective;
  return Tag::Noun;
}

const std::unordered_set<std::string>& other_pronouns() {
  static const std::unordered_set<std::string> set = {
      "i",      "me",      "my",     "mine",   "myself",     "you",   "your",
      "yours",  "yourself", "it",    "its",    "itself",     "we",    "us",
      "our",    "ours",    "ourselves", "they", "them",      "their", "theirs",
      "themselves", "who", "whom",   "whose",  "himself",    "herself"};
  return set;
}

}  // namespace

std::vector<TaggedToken> pos_tag(const std::vector<Token>& sentence, const TagLexicon& lexicon) {
  std::vector<TaggedToken> out;
  out.reserve(sentence.size());
  for (const Token& t : sentence) {
    Tag tag;
    const std::string& lower = t.lowercase;
    if (!is_word_token(t)) {
      tag = Tag::Other;
    } else if (lower == "he" || lower == "him" || lower == "his") {
      tag = Tag::PronounMale;
    } else if (lower == "she" || lower == "her" || lower == "hers") {
      tag = Tag::PronounFemale;
    } else if (other_pronouns().count(lower)) {
      tag = Tag::PronounOther;
    } else if (auto found = lexicon.find(lower)) {
      tag = *found;
    } else if (starts_upper(t.surface)) {
      // Unknown capitalized words are names. Sentence-initial ordinary words
      // are expected to resolve through the lexicon before reaching here.
      tag = Tag::ProperNoun;
    } else {
      tag = suffix_tag(lower);
    }
    out.push_back({t, tag});
  }
  return out;
}

TaggedDocument tag_document(const Document& doc, const TagLexicon& lexicon) {
  TaggedDocument tagged;
  tagged.text = doc.text;
  tagged.sentences.reserve(doc.sentences.size());
  for (const auto& sentence : doc.sentences) tagged.sentences.push_back(pos_tag(sentence, lexicon));
  return tagged;
}

std::size_t CorefResult::total_mentions() const {
  std::size_t n = anonymous.size();
  for (const CharacterEntity& e : entities) n += e.mentions.size();
  return n;
}

CorefResult resolve_coreference(const TaggedDocument& doc, const corpus::NameCensus& census,
                                const CorefOptions& options) {
  CorefResult res;
  std::unordered_map<std::string, int> by_forename;

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sentence = doc.sentences[s];
    for (std::size_t k = 0; k < sentence.size(); ++k) {
      const TaggedToken& tt = sentence[k];
      if (tt.tag == Tag::ProperNoun) {
        // Merge an adjacent run ("John Smith") into one mention keyed by the
        // forename.
        std::size_t last = k;
        while (last + 1 < sentence.size() && sentence[last + 1].tag == Tag::ProperNoun) ++last;

        const std::string& forename = tt.token.lowercase;
        int entity_index;
        auto it = by_forename.find(forename);
        if (it == by_forename.end()) {
          entity_index = static_cast<int>(res.entities.size());
          res.entities.push_back({tt.token.surface, census.lookup(forename), {}});
          by_forename.emplace(forename, entity_index);
        } else {
          entity_index = it->second;
        }

        Mention m;
        m.begin = tt.token.begin;
        m.end = sentence[last].token.end;
        m.kind = Mention::Kind::Name;
        m.surface = doc.text.substr(m.begin, m.end - m.begin);
        m.sentence_index = static_cast<int>(s);
        res.entities[entity_index].mentions.push_back(std::move(m));
        k = last;
      } else if (tt.tag == Tag::PronounMale || tt.tag == Tag::PronounFemale) {
        GenderLabel g =
            tt.tag == Tag::PronounMale ? GenderLabel::Male : GenderLabel::Female;
        // Nearest preceding mention of a same-gender entity, no further back
        // than the sentence window.
        int best = -1;
        std::size_t best_end = 0;
        for (std::size_t e = 0; e < res.entities.size(); ++e) {
          const CharacterEntity& entity = res.entities[e];
          if (entity.gender != g || entity.mentions.empty()) continue;
          const Mention& lastMention = entity.mentions.back();
          if (static_cast<int>(s) - lastMention.sentence_index > options.pronoun_window) continue;
          if (lastMention.end <= tt.token.begin &&
              (best < 0 || lastMention.end > best_end)) {
            best = static_cast<int>(e);
            best_end = lastMention.end;
          }
        }
        Mention m;
        m.begin = tt.token.begin;
        m.end = tt.token.end;
        m.kind = Mention::Kind::Pronoun;
        m.surface = tt.token.surface;
        m.sentence_index = static_cast<int>(s);
        if (best >= 0)
          res.entities[best].mentions.push_back(std::move(m));
        else
          res.anonymous.push_back({std::move(m), g});
      }
    }
  }
  return res;
}

namespace {

struct MentionRef {
  std::size_t begin;
  std::size_t end;
  int entity;
};

// All entity mentions grouped per sentence, ordered by span start.
std::vector<std::vector<MentionRef>> mentions_by_sentence(const TaggedDocument& doc,
                                                          const CorefResult& coref) {
  std::vector<std::vector<MentionRef>> out(doc.sentences.size());
  for (std::size_t e = 0; e < coref.entities.size(); ++e) {
    for (const Mention& m : coref.entities[e].mentions) {
      if (m.sentence_index >= 0 && static_cast<std::size_t>(m.sentence_index) < out.size())
        out[m.sentence_index].push_back({m.begin, m.end, static_cast<int>(e)});
    }
  }
  for (auto& v : out)
    std::sort(v.begin(), v.end(),
              [](const MentionRef& a, const MentionRef& b) { return a.begin < b.begin; });
  return out;
}

// Nearest mention that ends at or before the given byte position.
const MentionRef* preceding_mention(const std::vector<MentionRef>& mentions, std::size_t pos) {
  const MentionRef* best = nullptr;
  for (const MentionRef& m : mentions) {
    if (m.end <= pos && (!best || m.end > best->end)) best = &m;
  }
  return best;
}

}  // namespace

std::vector<SvoTriple> extract_svo(const TaggedDocument& doc, const CorefResult& coref) {
  auto per_sentence = mentions_by_sentence(doc, coref);
  std::vector<SvoTriple> triples;

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sentence = doc.sentences[s];
    const auto& mentions = per_sentence[s];
    for (std::size_t k = 0; k < sentence.size(); ++k) {
      if (sentence[k].tag != Tag::Verb) continue;
      const MentionRef* subject = preceding_mention(mentions, sentence[k].token.begin);
      if (!subject) continue;

      SvoTriple t;
      t.entity_index = subject->entity;
      t.verb_lemma = porter_stem(sentence[k].token.lowercase);
      t.sentence_index = static_cast<int>(s);
      t.verb_begin = sentence[k].token.begin;
      t.verb_end = sentence[k].token.end;
      for (std::size_t m = k + 1; m < sentence.size(); ++m) {
        if (sentence[m].tag == Tag::Noun || sentence[m].tag == Tag::ProperNoun) {
          t.object_lemma = porter_stem(sentence[m].token.lowercase);
          t.object_begin = sentence[m].token.begin;
          t.object_end = sentence[m].token.end;
          break;
        }
      }
      triples.push_back(std::move(t));
    }
  }
  return triples;
}

}  // namespace bookbias::textproc
