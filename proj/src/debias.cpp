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

#include "bookbias/debias.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_map>

#include "bookbias/stemmer.hpp"
#include "bookbias/strings.hpp"

namespace bookbias::debias {

using analogy::AnalogicalPair;
using analogy::PairLabel;
using analysis::DocumentAnalysis;
using textproc::Mention;
using textproc::SvoTriple;
using textproc::Tag;

const char* to_string(EditReason r) {
  switch (r) {
    case EditReason::RoleInterchange: return "role-interchange";
    case EditReason::OccupationSwap: return "occupation-swap";
    default: return "pronoun-repair";
  }
}

namespace {

struct TermOccurrence {
  int entity_index;
  std::string term;
  std::size_t begin;
  std::size_t end;
  const char* source;  // "verb" | "object" | "occupation"
};

int source_priority(const std::string& source) {
  if (source == "occupation") return 3;
  if (source == "object") return 2;
  return 1;
}

// Occupation terms are stored unstemmed in the lexicon; the knowledge base
// holds stems, so stem each word before matching.
std::string stem_words(const std::string& term) {
  std::string out;
  for (const std::string& word : split(term, ' ')) {
    if (word.empty()) continue;
    if (!out.empty()) out += ' ';
    out += porter_stem(word);
  }
  return out;
}

}  // namespace

std::vector<BiasFinding> detect_bias(const DocumentAnalysis& doc,
                                     const analogy::KnowledgeBase& kb) {
  std::unordered_map<std::string, std::vector<const AnalogicalPair*>> by_x, by_y;
  for (const AnalogicalPair& p : kb.pairs) {
    by_x[p.x].push_back(&p);
    by_y[p.y].push_back(&p);
  }

  std::vector<TermOccurrence> occurrences;
  for (const SvoTriple& t : doc.triples) {
    occurrences.push_back({t.entity_index, t.verb_lemma, t.verb_begin, t.verb_end, "verb"});
    if (t.has_object())
      occurrences.push_back({t.entity_index, t.object_lemma, t.object_begin, t.object_end, "object"});
  }
  for (const analysis::OccupationHit& h : doc.occupation_hits)
    occurrences.push_back({h.entity_index, stem_words(h.term), h.begin, h.end, "occupation"});

  // Key: span + pair; on duplicates the most specific source wins
  // (occupation > object > verb).
  std::map<std::tuple<std::size_t, std::size_t, std::string, std::string>, BiasFinding> dedup;
  auto consider = [&](const TermOccurrence& occ, const AnalogicalPair& pair, char slot) {
    const auto& entity = doc.coref.entities[occ.entity_index];
    BiasFinding f;
    f.entity_index = occ.entity_index;
    f.character = entity.canonical_name;
    f.gender = entity.gender;
    f.term = occ.term;
    f.kb_pair = pair;
    f.slot = slot;
    f.begin = occ.begin;
    f.end = occ.end;
    f.source = occ.source;

    auto key = std::make_tuple(occ.begin, occ.end, pair.x, pair.y);
    auto it = dedup.find(key);
    if (it == dedup.end())
      dedup.emplace(key, std::move(f));
    else if (source_priority(f.source) > source_priority(it->second.source))
      it->second = std::move(f);
  };

  for (const TermOccurrence& occ : occurrences) {
    if (occ.entity_index < 0 ||
        static_cast<std::size_t>(occ.entity_index) >= doc.coref.entities.size())
      continue;
    const GenderLabel gender = doc.coref.entities[occ.entity_index].gender;
    if (gender == GenderLabel::Male) {
      if (auto it = by_x.find(occ.term); it != by_x.end())
        for (const AnalogicalPair* p : it->second) consider(occ, *p, 'x');
    } else if (gender == GenderLabel::Female) {
      if (auto it = by_y.find(occ.term); it != by_y.end())
        for (const AnalogicalPair* p : it->second) consider(occ, *p, 'y');
    }
  }

  std::vector<BiasFinding> findings;
  findings.reserve(dedup.size());
  for (auto& [key, f] : dedup) findings.push_back(std::move(f));
  return findings;  // map order == (begin, end, x, y) == span order
}

namespace {

struct Interval {
  std::size_t begin;
  std::size_t end;
};

bool overlaps(const std::vector<Interval>& applied, std::size_t begin, std::size_t end) {
  for (const Interval& iv : applied)
    if (begin < iv.end && iv.begin < end) return true;
  return false;
}

std::string describe(const BiasFinding& f) {
  return "finding character=" + f.character + " term=" + f.term + " span=[" +
         std::to_string(f.begin) + "," + std::to_string(f.end) + ")";
}

// Replacement surface for a flipped gendered pronoun; empty when the word is
// not in the pronoun table. determiner_next: the following token is a noun,
// proper noun, or adjective (possessive-determiner position).
std::string flip_pronoun(const std::string& lower, bool determiner_next) {
  if (lower == "he") return "she";
  if (lower == "she") return "he";
  if (lower == "him") return "her";
  if (lower == "himself") return "herself";
  if (lower == "herself") return "himself";
  if (lower == "his") return determiner_next ? "her" : "hers";
  if (lower == "hers") return "his";
  if (lower == "her") return determiner_next ? "his" : "him";
  return {};
}

std::string match_case(const std::string& word, const std::string& original) {
  if (word.empty() || original.empty()) return word;
  if (std::isupper(static_cast<unsigned char>(original[0]))) {
    std::string out = word;
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
  }
  return word;
}

// Tag of the token immediately after byte position `end` in the same
// sentence, or Tag::Other when there is none.
Tag next_token_tag(const textproc::TaggedDocument& doc, int sentence, std::size_t end) {
  if (sentence < 0 || static_cast<std::size_t>(sentence) >= doc.sentences.size()) return Tag::Other;
  for (const auto& tt : doc.sentences[sentence])
    if (tt.token.begin >= end) return tt.tag;
  return Tag::Other;
}

}  // namespace

RewriteResult rewrite(const DocumentAnalysis& doc, std::span<const BiasFinding> findings,
                      const graph::CharacterGraph& graph, double epsilon) {
  RewriteResult result;
  const std::string& text = doc.tagged.text;

  const bool have_centrality = graph.centrality.size() == graph.nodes.size();
  std::vector<graph::SwapCandidate> candidates;
  if (have_centrality) candidates = graph::swap_candidates(graph, epsilon);

  std::vector<bool> consumed(findings.size(), false);
  std::vector<Interval> applied;
  std::vector<DebiasEdit> edits;

  auto record_edit = [&](const BiasFinding& f, const std::string& replacement) {
    DebiasEdit e;
    e.begin = f.begin;
    e.end = f.end;
    e.original = text.substr(f.begin, f.end - f.begin);
    e.replacement = replacement;
    e.reason = f.source == "occupation" ? EditReason::OccupationSwap : EditReason::RoleInterchange;
    edits.push_back(std::move(e));
    applied.push_back({f.begin, f.end});
  };

  for (std::size_t i = 0; i < findings.size(); ++i) {
    if (consumed[i]) continue;
    const BiasFinding& f = findings[i];

    if (f.kb_pair.label == PairLabel::GenderSpecific) {
      result.skipped.push_back(describe(f) + ": gender-specific pair; detected, not rewritten");
      continue;
    }
    if (!have_centrality) {
      result.skipped.push_back(describe(f) + ": centrality unavailable");
      continue;
    }
    const int node = graph.index_of(f.character);
    if (node < 0) {
      result.skipped.push_back(describe(f) + ": character not in interaction graph");
      continue;
    }
    if (overlaps(applied, f.begin, f.end)) {
      result.skipped.push_back(describe(f) + ": overlaps an earlier edit");
      continue;
    }

    // Partners in candidate order (smallest centrality difference first,
    // then name); the first one owning a counterpart finding wins.
    bool matched = false;
    bool had_partner = false;
    for (const graph::SwapCandidate& cand : candidates) {
      int partner_node;
      if (f.gender == GenderLabel::Male && cand.male == node)
        partner_node = cand.female;
      else if (f.gender == GenderLabel::Female && cand.female == node)
        partner_node = cand.male;
      else
        continue;
      had_partner = true;
      const std::string& partner = graph.nodes[partner_node].name;

      for (std::size_t j = 0; j < findings.size(); ++j) {
        if (j == i || consumed[j]) continue;
        const BiasFinding& g = findings[j];
        if (g.kb_pair.x != f.kb_pair.x || g.kb_pair.y != f.kb_pair.y) continue;
        if (g.slot == f.slot || g.character != partner) continue;
        if (overlaps(applied, g.begin, g.end)) continue;
        if (g.begin < f.end && f.begin < g.end) continue;  // spans collide

        record_edit(f, text.substr(g.begin, g.end - g.begin));
        record_edit(g, text.substr(f.begin, f.end - f.begin));
        consumed[i] = consumed[j] = true;
        matched = true;
        break;
      }
      if (matched) break;
    }
    if (!matched) {
      if (!had_partner)
        result.skipped.push_back(describe(f) + ": no centrality-matched partner under epsilon");
      else
        result.skipped.push_back(describe(f) + ": no counterpart finding among matched partners");
    }
  }

  // Pronoun repair: when an edit exchanged one whole name mention for
  // another entity's name, gendered pronouns attached to that stretch of the
  // chain flip along with it.
  const std::size_t main_edits = edits.size();
  for (std::size_t e = 0; e < main_edits; ++e) {
    const DebiasEdit& edit = edits[e];

    const textproc::CharacterEntity* owner = nullptr;
    const Mention* swapped = nullptr;
    for (const auto& entity : doc.coref.entities) {
      for (const Mention& m : entity.mentions) {
        if (m.kind == Mention::Kind::Name && m.begin == edit.begin && m.end == edit.end) {
          owner = &entity;
          swapped = &m;
          break;
        }
      }
      if (owner) break;
    }
    if (!owner) continue;

    // The replacement must itself be another entity's name, of the opposite
    // gender, for the exchange to demand pronoun repair.
    const textproc::CharacterEntity* incoming = nullptr;
    for (const auto& entity : doc.coref.entities)
      if (&entity != owner && ascii_lower(entity.canonical_name) == ascii_lower(edit.replacement))
        incoming = &entity;
    if (!incoming || incoming->gender == owner->gender) continue;

    // Pronouns of the outgoing entity between the swapped mention and its
    // next name mention follow the new name's gender.
    std::size_t segment_end = text.size();
    for (const Mention& m : owner->mentions)
      if (m.kind == Mention::Kind::Name && m.begin > swapped->begin) {
        segment_end = std::min(segment_end, m.begin);
      }
    for (const Mention& m : owner->mentions) {
      if (m.kind != Mention::Kind::Pronoun) continue;
      if (m.begin <= swapped->end || m.begin >= segment_end) continue;
      if (overlaps(applied, m.begin, m.end)) continue;
      const std::string lower = ascii_lower(m.surface);
      const Tag next = next_token_tag(doc.tagged, m.sentence_index, m.end);
      const bool determiner_next =
          next == Tag::Noun || next == Tag::ProperNoun || next == Tag::Adjective;
      std::string flipped = flip_pronoun(lower, determiner_next);
      if (flipped.empty()) continue;
      DebiasEdit pe;
      pe.begin = m.begin;
      pe.end = m.end;
      pe.original = m.surface;
      pe.replacement = match_case(flipped, m.surface);
      pe.reason = EditReason::PronounRepair;
      edits.push_back(std::move(pe));
      applied.push_back({m.begin, m.end});
    }
  }

  std::sort(edits.begin(), edits.end(),
            [](const DebiasEdit& a, const DebiasEdit& b) { return a.begin < b.begin; });

  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  for (const DebiasEdit& e : edits) {
    out.append(text, pos, e.begin - pos);
    out.append(e.replacement);
    pos = e.end;
  }
  out.append(text, pos, text.size() - pos);

  result.text = std::move(out);
  result.edits = std::move(edits);
  return result;
}

std::string explain(std::span<const BiasFinding> findings, std::span<const DebiasEdit> edits,
                    std::span<const std::string> skipped, const analogy::KnowledgeBase& kb,
                    double epsilon) {
  char buf[64];
  std::ostringstream out;
  out << "bookbias " << kVersion << " de-bias audit\n";
  out << "kb: embeddings=" << kb.provenance.embeddings_path
      << " vocabulary=" << kb.provenance.vocabulary << " dimension=" << kb.provenance.dimension
      << " hash=" << kb.provenance.content_hash;
  std::snprintf(buf, sizeof buf, " tau=%.4f tau1=%.4f tau2=%.4f", kb.provenance.config.tau,
                kb.provenance.config.tau1, kb.provenance.config.tau2);
  out << buf << " version=" << kb.provenance.version << '\n';
  std::snprintf(buf, sizeof buf, "%.4f", epsilon);
  out << "epsilon: " << buf << '\n';

  out << "findings: " << findings.size() << '\n';
  for (std::size_t i = 0; i < findings.size(); ++i) {
    const BiasFinding& f = findings[i];
    out << "finding " << i << ": character=" << f.character << " gender=" << to_string(f.gender)
        << " term=" << f.term << " pair=(" << f.kb_pair.x << "," << f.kb_pair.y
        << ") label=" << analogy::to_string(f.kb_pair.label) << " slot=" << f.slot
        << " source=" << f.source << " span=[" << f.begin << "," << f.end << ")\n";
  }
  out << "edits: " << edits.size() << '\n';
  for (std::size_t i = 0; i < edits.size(); ++i) {
    const DebiasEdit& e = edits[i];
    out << "edit " << i << ": span=[" << e.begin << "," << e.end << ") '" << e.original << "' -> '"
        << e.replacement << "' reason=" << to_string(e.reason) << '\n';
  }
  out << "skipped: " << skipped.size() << '\n';
  for (std::size_t i = 0; i < skipped.size(); ++i) out << "skip " << i << ": " << skipped[i] << '\n';
  return out.str();
}

}  // namespace bookbias::debias
