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

#include "bookbias/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "bookbias/stemmer.hpp"
#include "bookbias/strings.hpp"

namespace bookbias::analysis {

using textproc::CorefResult;
using textproc::Mention;
using textproc::SvoTriple;
using textproc::Tag;
using textproc::TaggedDocument;
using textproc::TaggedToken;

int AssociationProfile::total() const {
  int n = 0;
  for (const auto& [term, count] : counts) n += count;
  return n;
}

MentionStats count_mentions(const CorefResult& coref) {
  MentionStats stats;
  for (const auto& entity : coref.entities) {
    for (const Mention& m : entity.mentions) {
      const bool name = m.kind == Mention::Kind::Name;
      switch (entity.gender) {
        case GenderLabel::Male: (name ? stats.male_name : stats.male_pronoun)++; break;
        case GenderLabel::Female: (name ? stats.female_name : stats.female_pronoun)++; break;
        default: stats.unknown++; break;
      }
    }
  }
  for (const auto& anon : coref.anonymous) {
    if (anon.gender == GenderLabel::Male)
      stats.male_pronoun++;
    else if (anon.gender == GenderLabel::Female)
      stats.female_pronoun++;
    else
      stats.unknown++;
  }
  return stats;
}

namespace {

struct MentionRef {
  std::size_t begin;
  std::size_t end;
  int entity;
};

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

const MentionRef* mention_ending_before(const std::vector<MentionRef>& mentions, std::size_t pos) {
  const MentionRef* best = nullptr;
  for (const MentionRef& m : mentions)
    if (m.end <= pos && (!best || m.end > best->end)) best = &m;
  return best;
}

bool is_copula(const TaggedToken& tt) {
  if (tt.tag != Tag::Verb) return false;
  const std::string& w = tt.token.lowercase;
  return w == "is" || w == "am" || w == "are" || w == "was" || w == "were" || w == "be" ||
         w == "been" || w == "being";
}

void credit(GenderProfiles& profiles, GenderLabel gender, const std::string& term) {
  if (gender == GenderLabel::Male)
    profiles.male.counts[term]++;
  else if (gender == GenderLabel::Female)
    profiles.female.counts[term]++;
}

}  // namespace

GenderProfiles adjective_profile(const TaggedDocument& doc, const CorefResult& coref) {
  GenderProfiles profiles;
  const auto per_sentence = mentions_by_sentence(doc, coref);

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sentence = doc.sentences[s];
    const auto& mentions = per_sentence[s];
    for (std::size_t k = 0; k < sentence.size(); ++k) {
      if (sentence[k].tag != Tag::Adjective) continue;
      const std::string term = porter_stem(sentence[k].token.lowercase);

      // Rule 1: the adjective directly precedes a mention ("rich John").
      int entity = -1;
      if (k + 1 < sentence.size()) {
        for (const MentionRef& m : mentions) {
          if (m.begin == sentence[k + 1].token.begin) {
            entity = m.entity;
            break;
          }
        }
      }
      // Rule 2: predicative position ("John is rich"): nearest preceding
      // copula, whose subject mention takes the adjective.
      if (entity < 0) {
        for (std::size_t v = k; v-- > 0;) {
          if (!is_copula(sentence[v])) continue;
          const MentionRef* subject = mention_ending_before(mentions, sentence[v].token.begin);
          if (subject) entity = subject->entity;
          break;
        }
      }
      if (entity >= 0) credit(profiles, coref.entities[entity].gender, term);
    }
  }
  return profiles;
}

GenderProfiles verb_profile(std::span<const SvoTriple> triples, const CorefResult& coref) {
  GenderProfiles profiles;
  for (const SvoTriple& t : triples) {
    if (t.entity_index < 0 || static_cast<std::size_t>(t.entity_index) >= coref.entities.size())
      continue;
    credit(profiles, coref.entities[t.entity_index].gender, t.verb_lemma);
  }
  return profiles;
}

std::vector<OccupationHit> find_occupation_hits(const TaggedDocument& doc,
                                                const CorefResult& coref,
                                                const corpus::OccupationLexicon& lexicon) {
  std::vector<OccupationHit> hits;
  const auto per_sentence = mentions_by_sentence(doc, coref);
  const std::size_t max_words = std::max<std::size_t>(lexicon.max_words(), 1);

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sentence = doc.sentences[s];
    const auto& mentions = per_sentence[s];
    for (std::size_t k = 0; k < sentence.size(); ++k) {
      if (sentence[k].tag != Tag::Noun) continue;

      // Greedy longest match over following word tokens.
      std::size_t matched_len = 0;
      std::string matched_term;
      std::string candidate;
      for (std::size_t len = 1; len <= max_words && k + len <= sentence.size(); ++len) {
        const TaggedToken& tt = sentence[k + len - 1];
        if (tt.tag == Tag::Other && !std::isalnum(static_cast<unsigned char>(tt.token.surface[0])))
          break;  // punctuation ends the span
        if (len > 1) candidate += ' ';
        candidate += tt.token.lowercase;
        if (lexicon.contains(candidate)) {
          matched_len = len;
          matched_term = candidate;
        }
      }
      if (matched_len == 0) continue;

      OccupationHit hit;
      hit.term = matched_term;
      hit.level = lexicon.level(matched_term);
      hit.begin = sentence[k].token.begin;
      hit.end = sentence[k + matched_len - 1].token.end;
      hit.sentence_index = static_cast<int>(s);

      // Attach to the nearest mention in the sentence; ties prefer the
      // preceding one.
      long long best = -1;
      for (const MentionRef& m : mentions) {
        long long dist;
        bool precedes = m.end <= hit.begin;
        if (precedes)
          dist = static_cast<long long>(hit.begin) - static_cast<long long>(m.end);
        else if (m.begin >= hit.end)
          dist = static_cast<long long>(m.begin) - static_cast<long long>(hit.end);
        else
          continue;  // mention overlaps the term span
        if (best < 0 || dist < best) {
          best = dist;
          hit.entity_index = m.entity;
        } else if (dist == best && precedes) {
          hit.entity_index = m.entity;
        }
      }
      if (hit.entity_index >= 0) hits.push_back(std::move(hit));
      k += matched_len - 1;
    }
  }
  return hits;
}

OccupationStats occupation_stats(std::span<const OccupationHit> hits, const CorefResult& coref) {
  OccupationStats stats;
  for (const OccupationHit& h : hits) {
    if (h.entity_index < 0 || static_cast<std::size_t>(h.entity_index) >= coref.entities.size())
      continue;
    OccupationSide* side = nullptr;
    switch (coref.entities[h.entity_index].gender) {
      case GenderLabel::Male: side = &stats.male; break;
      case GenderLabel::Female: side = &stats.female; break;
      default: break;
    }
    if (!side) continue;
    side->counts[h.term]++;
    side->levels[h.term] = h.level;
    side->level_sum += h.level;
    side->occurrences++;
  }
  return stats;
}

CentralCharacter central_character(const CorefResult& coref, const graph::CharacterGraph& graph) {
  CentralCharacter result;
  const bool have_centrality = graph.centrality.size() == graph.nodes.size();

  int best = -1;
  for (std::size_t e = 0; e < coref.entities.size(); ++e) {
    if (best < 0) {
      best = static_cast<int>(e);
      continue;
    }
    const auto mentions = coref.entities[e].mentions.size();
    const auto best_mentions = coref.entities[best].mentions.size();
    if (mentions != best_mentions) {
      if (mentions > best_mentions) best = static_cast<int>(e);
      continue;
    }
    const double c = have_centrality ? graph.centrality[e] : 0.0;
    const double bc = have_centrality ? graph.centrality[best] : 0.0;
    if (c != bc) {
      if (c > bc) best = static_cast<int>(e);
      continue;
    }
    if (coref.entities[e].canonical_name < coref.entities[best].canonical_name)
      best = static_cast<int>(e);
  }

  if (best >= 0) {
    result.found = true;
    result.name = coref.entities[best].canonical_name;
    result.gender = coref.entities[best].gender;
    result.mentions = static_cast<int>(coref.entities[best].mentions.size());
  }
  return result;
}

DocumentAnalysis analyze_document(const std::string& text, const AnalysisContext& ctx) {
  if (!ctx.census) throw std::invalid_argument("analyze_document: census is required");
  DocumentAnalysis out;
  textproc::Document doc = textproc::tokenize(text, ctx.abbreviations);
  out.tagged = textproc::tag_document(doc, ctx.lexicon);
  out.coref = textproc::resolve_coreference(out.tagged, *ctx.census, ctx.coref);
  out.triples = textproc::extract_svo(out.tagged, out.coref);
  if (ctx.occupations)
    out.occupation_hits = find_occupation_hits(out.tagged, out.coref, *ctx.occupations);
  return out;
}

BookAnalysis analyze_book(const corpus::BookRecord& record, const AnalysisContext& ctx) {
  const DocumentAnalysis doc = analyze_document(record.description, ctx);

  graph::CharacterGraph g = graph::build_graph(doc.triples, doc.coref, doc.tagged);
  graph::compute_betweenness(g);

  BookAnalysis book;
  book.id = record.id;
  book.year = record.year;
  book.mentions = count_mentions(doc.coref);
  book.adjectives = adjective_profile(doc.tagged, doc.coref);
  book.verbs = verb_profile(doc.triples, doc.coref);
  book.occupations = occupation_stats(doc.occupation_hits, doc.coref);
  book.central = central_character(doc.coref, g);
  return book;
}

namespace {

void merge_profile(AssociationProfile& into, const AssociationProfile& from) {
  for (const auto& [term, count] : from.counts) into.counts[term] += count;
}

void merge_side(OccupationSide& into, const OccupationSide& from) {
  for (const auto& [term, count] : from.counts) into.counts[term] += count;
  for (const auto& [term, level] : from.levels) into.levels[term] = level;
  into.level_sum += from.level_sum;
  into.occurrences += from.occurrences;
}

}  // namespace

CorpusAnalysis analyze_corpus(std::span<const corpus::BookRecord> records,
                              const AnalysisContext& ctx, int jobs) {
  if (!ctx.census) throw std::invalid_argument("analyze_corpus: census is required");
  CorpusAnalysis out;
  out.books.resize(records.size());

  if (jobs < 1) jobs = 1;
  const int workers = std::min<int>(jobs, static_cast<int>(records.size() ? records.size() : 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i) out.books[i] = analyze_book(records[i], ctx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(records.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1)) {
          try {
            out.books[i] = analyze_book(records[i], ctx);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  // Serial, corpus-order aggregation keeps results independent of scheduling.
  struct YearSums {
    int books = 0;
    long long male_name = 0, male_pronoun = 0, female_name = 0, female_pronoun = 0, unknown = 0;
  };
  std::map<int, YearSums> sums;
  for (const BookAnalysis& b : out.books) {
    YearSums& y = sums[b.year];
    y.books++;
    y.male_name += b.mentions.male_name;
    y.male_pronoun += b.mentions.male_pronoun;
    y.female_name += b.mentions.female_name;
    y.female_pronoun += b.mentions.female_pronoun;
    y.unknown += b.mentions.unknown;

    merge_profile(out.adjectives.male, b.adjectives.male);
    merge_profile(out.adjectives.female, b.adjectives.female);
    merge_profile(out.verbs.male, b.verbs.male);
    merge_profile(out.verbs.female, b.verbs.female);
    merge_side(out.occupations.male, b.occupations.male);
    merge_side(out.occupations.female, b.occupations.female);
  }
  for (const auto& [year, y] : sums) {
    YearMentionMeans m;
    m.books = y.books;
    const double n = y.books;
    m.male_name = y.male_name / n;
    m.male_pronoun = y.male_pronoun / n;
    m.male_total = (y.male_name + y.male_pronoun) / n;
    m.female_name = y.female_name / n;
    m.female_pronoun = y.female_pronoun / n;
    m.female_total = (y.female_name + y.female_pronoun) / n;
    m.unknown = y.unknown / n;
    m.male_sum = y.male_name + y.male_pronoun;
    m.female_sum = y.female_name + y.female_pronoun;
    out.mentions_by_year.emplace(year, m);
  }

  out.authors_by_year = corpus::author_gender_counts(records, *ctx.census);
  return out;
}

namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string ratio_text(long long male, long long female) {
  if (female > 0) return fixed4(static_cast<double>(male) / static_cast<double>(female));
  return male > 0 ? "inf" : fixed4(0.0);
}

// (term, count) sorted by count descending, then term; truncated to k.
std::vector<std::pair<std::string, int>> top_terms(const std::map<std::string, int>& counts,
                                                   int k) {
  std::vector<std::pair<std::string, int>> terms(counts.begin(), counts.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (k >= 0 && terms.size() > static_cast<std::size_t>(k)) terms.resize(k);
  return terms;
}

class Report {
 public:
  Report(const std::filesystem::path& path, const std::string& header) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open report for writing: " + path.string());
    out_ << header << '\n';
  }
  std::ofstream& stream() { return out_; }
  void close() {
    out_.close();
    if (!out_) throw std::runtime_error("write failure: " + path_.string());
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace

std::vector<std::filesystem::path> emit_reports(const CorpusAnalysis& analysis,
                                                const EmitConfig& config) {
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir);
  const std::string header = "# bookbias " + std::string(kVersion) + " | " + config.config_echo;
  std::vector<fs::path> written;

  {
    fs::path p = config.out_dir / "authors_by_year.csv";
    Report r(p, header);
    r.stream() << "year,male,female,unknown\n";
    for (const auto& [year, counts] : analysis.authors_by_year)
      r.stream() << year << ',' << counts.male << ',' << counts.female << ',' << counts.unknown
                 << '\n';
    r.close();
    written.push_back(p);
  }
  {
    fs::path p = config.out_dir / "mentions_by_year.csv";
    Report r(p, header);
    r.stream() << "year,books,mean_male_name,mean_male_pronoun,mean_male_total,"
                  "mean_female_name,mean_female_pronoun,mean_female_total,mean_unknown,"
                  "male_female_ratio\n";
    for (const auto& [year, m] : analysis.mentions_by_year) {
      r.stream() << year << ',' << m.books << ',' << fixed4(m.male_name) << ','
                 << fixed4(m.male_pronoun) << ',' << fixed4(m.male_total) << ','
                 << fixed4(m.female_name) << ',' << fixed4(m.female_pronoun) << ','
                 << fixed4(m.female_total) << ',' << fixed4(m.unknown) << ','
                 << ratio_text(m.male_sum, m.female_sum) << '\n';
    }
    r.close();
    written.push_back(p);
  }

  auto profile_report = [&](const char* filename, const GenderProfiles& profiles) {
    fs::path p = config.out_dir / filename;
    Report r(p, header);
    r.stream() << "gender,term,count\n";
    for (const auto& [term, count] : top_terms(profiles.male.counts, config.top_k))
      r.stream() << "male," << term << ',' << count << '\n';
    for (const auto& [term, count] : top_terms(profiles.female.counts, config.top_k))
      r.stream() << "female," << term << ',' << count << '\n';
    r.close();
    written.push_back(p);
  };
  profile_report("adjectives.csv", analysis.adjectives);
  profile_report("verbs.csv", analysis.verbs);

  {
    fs::path p = config.out_dir / "occupations.csv";
    Report r(p, header);
    r.stream() << "gender,term,level,count\n";
    auto side_rows = [&](const char* gender, const OccupationSide& side) {
      for (const auto& [term, count] : top_terms(side.counts, config.top_k)) {
        const auto level = side.levels.find(term);
        r.stream() << gender << ',' << term << ',' << (level != side.levels.end() ? level->second : 0)
                   << ',' << count << '\n';
      }
    };
    side_rows("male", analysis.occupations.male);
    side_rows("female", analysis.occupations.female);
    r.close();
    written.push_back(p);
  }
  {
    fs::path p = config.out_dir / "occupation_levels.csv";
    Report r(p, header);
    r.stream() << "gender,occurrences,mean_level\n";
    r.stream() << "male," << analysis.occupations.male.occurrences << ','
               << fixed4(analysis.occupations.male.mean_level()) << '\n';
    r.stream() << "female," << analysis.occupations.female.occurrences << ','
               << fixed4(analysis.occupations.female.mean_level()) << '\n';
    r.close();
    written.push_back(p);
  }
  {
    fs::path p = config.out_dir / "central_characters.csv";
    Report r(p, header);
    r.stream() << "book_id,name,gender,mentions\n";
    for (const BookAnalysis& b : analysis.books) {
      if (b.central.found)
        r.stream() << b.id << ',' << b.central.name << ',' << to_string(b.central.gender) << ','
                   << b.central.mentions << '\n';
      else
        r.stream() << b.id << ",-,unknown,0\n";
    }
    r.close();
    written.push_back(p);
  }
  {
    fs::path p = config.out_dir / "summary.json";
    long long male_mentions = 0, female_mentions = 0, unknown_mentions = 0;
    int central_male = 0, central_female = 0;
    for (const BookAnalysis& b : analysis.books) {
      male_mentions += b.mentions.male_total();
      female_mentions += b.mentions.female_total();
      unknown_mentions += b.mentions.unknown;
      if (b.central.found && b.central.gender == GenderLabel::Male) central_male++;
      if (b.central.found && b.central.gender == GenderLabel::Female) central_female++;
    }
    long long male_authors = 0, female_authors = 0, unknown_authors = 0;
    for (const auto& [year, c] : analysis.authors_by_year) {
      male_authors += c.male;
      female_authors += c.female;
      unknown_authors += c.unknown;
    }

    nlohmann::json summary = {
        {"version", std::string(kVersion)},
        {"config", config.config_echo},
        {"books", analysis.books.size()},
        {"authors",
         {{"male", male_authors}, {"female", female_authors}, {"unknown", unknown_authors}}},
        {"mentions",
         {{"male_total", male_mentions},
          {"female_total", female_mentions},
          {"unknown", unknown_mentions},
          {"male_female_ratio", ratio_text(male_mentions, female_mentions)}}},
        {"adjectives",
         {{"male_total", analysis.adjectives.male.total()},
          {"female_total", analysis.adjectives.female.total()}}},
        {"verbs",
         {{"male_total", analysis.verbs.male.total()},
          {"female_total", analysis.verbs.female.total()}}},
        {"occupations",
         {{"male_occurrences", analysis.occupations.male.occurrences},
          {"male_mean_level", fixed4(analysis.occupations.male.mean_level())},
          {"female_occurrences", analysis.occupations.female.occurrences},
          {"female_mean_level", fixed4(analysis.occupations.female.mean_level())}}},
        {"central_characters", {{"male", central_male}, {"female", central_female}}}};

    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report for writing: " + p.string());
    out << summary.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failure: " + p.string());
    written.push_back(p);
  }
  return written;
}

}  // namespace bookbias::analysis
