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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <string>
#include <vector>

#include "bookbias/analogy.hpp"
#include "bookbias/analysis.hpp"
#include "bookbias/corpus.hpp"
#include "bookbias/debias.hpp"
#include "bookbias/graph.hpp"

using namespace bookbias;
using namespace bookbias::debias;
using analogy::KnowledgeBase;
using analogy::PairLabel;

namespace {

std::filesystem::path data_dir() { return BOOKBIAS_DATA_DIR; }

const analysis::AnalysisContext& context() {
  static const analysis::AnalysisContext ctx = [] {
    static const corpus::NameCensus census = corpus::load_census(data_dir() / "census.csv");
    static const corpus::OccupationLexicon occupations =
        corpus::load_occupations(data_dir() / "occupations.csv");
    analysis::AnalysisContext c;
    c.census = &census;
    c.occupations = &occupations;
    c.lexicon = textproc::TagLexicon::load(data_dir() / "tags.csv");
    c.abbreviations = textproc::AbbreviationSet::load(data_dir() / "abbreviations.txt");
    return c;
  }();
  return ctx;
}

const KnowledgeBase& fixture_kb() {
  static const KnowledgeBase kb = analogy::load_kb(data_dir() / "fixture_kb.jsonl");
  return kb;
}

KnowledgeBase make_kb(std::vector<analogy::AnalogicalPair> pairs) {
  KnowledgeBase kb;
  kb.provenance.embeddings_path = "synthetic";
  kb.provenance.vocabulary = 2 + pairs.size();
  kb.provenance.dimension = 3;
  kb.provenance.content_hash = "0";
  kb.pairs = std::move(pairs);
  return kb;
}

struct Run {
  analysis::DocumentAnalysis doc;
  graph::CharacterGraph graph;
  std::vector<BiasFinding> findings;
  RewriteResult result;
};

Run run_debias(const std::string& text, const KnowledgeBase& kb) {
  Run r;
  r.doc = analysis::analyze_document(text, context());
  r.graph = graph::build_graph(r.doc.triples, r.doc.coref, r.doc.tagged);
  graph::compute_betweenness(r.graph);
  r.findings = detect_bias(r.doc, kb);
  r.result = rewrite(r.doc, r.findings, r.graph, graph::default_epsilon(r.graph));
  return r;
}

int count_containing(const std::vector<std::string>& lines, const std::string& needle) {
  int n = 0;
  for (const auto& s : lines)
    if (s.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("edit reasons have stable names") {
  CHECK(std::string(to_string(EditReason::RoleInterchange)) == "role-interchange");
  CHECK(std::string(to_string(EditReason::OccupationSwap)) == "occupation-swap");
  CHECK(std::string(to_string(EditReason::PronounRepair)) == "pronoun-repair");
}

TEST_CASE("stereotype-consistent occupations are detected with spans") {
  const std::string text = "John is a doctor. Mary is a nurse.";
  auto doc = analysis::analyze_document(text, context());
  auto findings = detect_bias(doc, fixture_kb());
  REQUIRE(findings.size() == 2);

  CHECK(findings[0].character == "John");
  CHECK(findings[0].gender == GenderLabel::Male);
  CHECK(findings[0].term == "doctor");
  CHECK(findings[0].slot == 'x');
  CHECK(findings[0].source == "occupation");
  CHECK(findings[0].kb_pair.x == "doctor");
  CHECK(findings[0].kb_pair.y == "nurs");
  CHECK(findings[0].kb_pair.label == PairLabel::GenderNeutral);
  CHECK(text.substr(findings[0].begin, findings[0].end - findings[0].begin) == "doctor");

  CHECK(findings[1].character == "Mary");
  CHECK(findings[1].gender == GenderLabel::Female);
  CHECK(findings[1].term == "nurs");
  CHECK(findings[1].slot == 'y');
  CHECK(text.substr(findings[1].begin, findings[1].end - findings[1].begin) == "nurse");
  CHECK(findings[0].begin < findings[1].begin);  // span order
}

TEST_CASE("counter-stereotypical assignments are left alone") {
  // A single directed pair: doctor on the male side, nurse on the female.
  // (The bundled fixture also carries the reversed pair, which would make
  // this text consistent again, so a one-pair base isolates the rule.)
  KnowledgeBase kb =
      make_kb({{"doctor", "nurs", 0.0, 0.29, 0.29, PairLabel::GenderNeutral}});
  auto doc = analysis::analyze_document("Mary is a doctor. John is a nurse.", context());
  CHECK(detect_bias(doc, kb).empty());
}

TEST_CASE("verb and object lemmas are matched, occupation beats object") {
  SUBCASE("verb lemma, female y-slot") {
    auto doc = analysis::analyze_document("Mary nursed the baby.", context());
    auto findings = detect_bias(doc, fixture_kb());
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].source == "verb");
    CHECK(findings[0].term == "nurs");
    CHECK(findings[0].slot == 'y');

    // The same verb under a male subject is not stereotype-consistent
    // (against a base without the reversed pair).
    KnowledgeBase one =
        make_kb({{"doctor", "nurs", 0.0, 0.29, 0.29, PairLabel::GenderNeutral}});
    auto male = analysis::analyze_document("John nursed the baby.", context());
    CHECK(detect_bias(male, one).empty());
  }

  SUBCASE("object lemma source when no occupation is involved") {
    auto doc = analysis::analyze_document("Arthur is a king.", context());
    auto findings = detect_bias(doc, fixture_kb());
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].source == "object");
    CHECK(findings[0].term == "king");
  }

  SUBCASE("occupation wins the same span over the copula object") {
    // "nurse" is both the triple's object and an occupation hit.
    auto doc = analysis::analyze_document("Mary is a nurse.", context());
    auto findings = detect_bias(doc, fixture_kb());
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].source == "occupation");
  }
}

TEST_CASE("neutral occupation pairs swap across the centrality-matched pair") {
  const std::string text = "John is a doctor. Mary is a nurse.";
  auto run = run_debias(text, fixture_kb());

  CHECK(run.result.text == "John is a nurse. Mary is a doctor.");
  REQUIRE(run.result.edits.size() == 2);
  CHECK(run.result.edits[0].original == "doctor");
  CHECK(run.result.edits[0].replacement == "nurse");
  CHECK(run.result.edits[0].reason == EditReason::OccupationSwap);
  CHECK(run.result.edits[1].original == "nurse");
  CHECK(run.result.edits[1].replacement == "doctor");
  CHECK(run.result.skipped.empty());

  // Running the de-biaser on its own output restores the original bytes.
  auto back = run_debias(run.result.text, fixture_kb());
  CHECK(back.result.text == text);
  CHECK(back.result.edits.size() == 2);
}

TEST_CASE("gender-specific pairs are reported but never rewritten") {
  const std::string text = "Arthur is a king. Guinevere is a queen.";
  auto run = run_debias(text, fixture_kb());

  CHECK(run.findings.size() == 2);
  CHECK(run.result.text == text);  // byte-identical
  CHECK(run.result.edits.empty());
  REQUIRE(run.result.skipped.size() == 2);
  CHECK(count_containing(run.result.skipped, "gender-specific pair; detected, not rewritten") ==
        2);
}

TEST_CASE("rewrite skips cleanly when no partner or counterpart exists") {
  SUBCASE("partner lacks a counterpart finding") {
    auto run = run_debias("John is a doctor. Mary is a waitress.", fixture_kb());
    REQUIRE(run.findings.size() == 1);  // waitress is not in the knowledge base
    CHECK(run.result.edits.empty());
    REQUIRE(run.result.skipped.size() == 1);
    CHECK(count_containing(run.result.skipped, "no counterpart finding among matched partners") ==
          1);
    CHECK(run.result.text == "John is a doctor. Mary is a waitress.");
  }

  SUBCASE("no opposite-gender character at all") {
    auto run = run_debias("John is a doctor.", fixture_kb());
    REQUIRE(run.findings.size() == 1);
    REQUIRE(run.result.skipped.size() == 1);
    CHECK(count_containing(run.result.skipped, "no centrality-matched partner under epsilon") ==
          1);
  }

  SUBCASE("centrality not computed") {
    auto doc = analysis::analyze_document("John is a doctor. Mary is a nurse.", context());
    auto graph = graph::build_graph(doc.triples, doc.coref, doc.tagged);  // no betweenness
    auto findings = detect_bias(doc, fixture_kb());
    auto result = rewrite(doc, findings, graph, 1.0);
    CHECK(result.edits.empty());
    CHECK(count_containing(result.skipped, "centrality unavailable") == 2);
  }

  SUBCASE("character missing from the supplied graph") {
    auto doc = analysis::analyze_document("John is a doctor. Mary is a nurse.", context());
    auto findings = detect_bias(doc, fixture_kb());
    graph::CharacterGraph empty;
    graph::compute_betweenness(empty);
    auto result = rewrite(doc, findings, empty, 1.0);
    CHECK(result.edits.empty());
    CHECK(count_containing(result.skipped, "character not in interaction graph") == 2);
  }
}

TEST_CASE("epsilon gates which characters may trade roles") {
  auto doc = analysis::analyze_document("John is a doctor. Mary is a nurse.", context());
  auto graph = graph::build_graph(doc.triples, doc.coref, doc.tagged);
  graph::compute_betweenness(graph);
  REQUIRE(graph.nodes.size() == 2);
  graph.centrality = {0.0, 1.0};  // force a centrality gap
  auto findings = detect_bias(doc, fixture_kb());

  auto blocked = rewrite(doc, findings, graph, 0.5);
  CHECK(blocked.edits.empty());
  CHECK(count_containing(blocked.skipped, "no centrality-matched partner under epsilon") == 2);

  auto allowed = rewrite(doc, findings, graph, 1.5);
  CHECK(allowed.edits.size() == 2);
  CHECK(allowed.text == "John is a nurse. Mary is a doctor.");
}

TEST_CASE("whole-name interchanges repair the attached pronouns") {
  KnowledgeBase kb = make_kb({{"tom", "anna", 0.1, 0.5, 0.5, PairLabel::GenderNeutral}});
  const std::string text =
      "John met Tom. He lost his book. Mary met Anna. She lost her ring.";
  auto run = run_debias(text, kb);

  REQUIRE(run.findings.size() == 2);
  CHECK(run.findings[0].character == "John");
  CHECK(run.findings[0].term == "tom");
  CHECK(run.findings[1].character == "Mary");
  CHECK(run.findings[1].term == "anna");

  CHECK(run.result.text ==
        "John met Anna. She lost her book. Mary met Tom. He lost his ring.");
  REQUIRE(run.result.edits.size() == 6);
  int role = 0, pronoun = 0;
  for (const auto& e : run.result.edits) {
    if (e.reason == EditReason::RoleInterchange) ++role;
    if (e.reason == EditReason::PronounRepair) ++pronoun;
  }
  CHECK(role == 2);
  CHECK(pronoun == 4);

  // Case is preserved and the his/her forms follow the next token.
  bool saw_he_to_she = false, saw_his_to_her = false, saw_her_to_his = false;
  for (const auto& e : run.result.edits) {
    if (e.original == "He" && e.replacement == "She") saw_he_to_she = true;
    if (e.original == "his" && e.replacement == "her") saw_his_to_her = true;
    if (e.original == "her" && e.replacement == "his") saw_her_to_his = true;
  }
  CHECK(saw_he_to_she);
  CHECK(saw_his_to_her);
  CHECK(saw_her_to_his);

  // The rewritten text is stable: nothing in it is stereotype-consistent.
  auto again = run_debias(run.result.text, kb);
  CHECK(again.findings.empty());
  CHECK(again.result.text == run.result.text);
}

TEST_CASE("standalone possessives flip to the standalone form") {
  KnowledgeBase kb = make_kb({{"tom", "anna", 0.1, 0.5, 0.5, PairLabel::GenderNeutral}});
  const std::string text = "John met Tom. Mary met Anna. The ring was hers.";
  auto run = run_debias(text, kb);
  REQUIRE(run.result.edits.size() >= 2);
  bool saw_hers_to_his = false;
  for (const auto& e : run.result.edits)
    if (e.original == "hers" && e.replacement == "his") saw_hers_to_his = true;
  CHECK(saw_hers_to_his);
  CHECK(run.result.text == "John met Anna. Mary met Tom. The ring was his.");
}

TEST_CASE("later findings overlapping an applied edit are skipped") {
  KnowledgeBase kb = make_kb({
      {"child", "maid", 0.1, 0.5, 0.5, PairLabel::GenderNeutral},
      {"child bride", "maid", 0.2, 0.5, 0.5, PairLabel::GenderNeutral},
  });
  const std::string text = "John is a child bride. Mary is a maid.";
  auto run = run_debias(text, kb);

  // Four findings: John's object "child" and occupation "child bride";
  // Mary's "maid" once per knowledge-base pair.
  REQUIRE(run.findings.size() == 4);
  CHECK(run.result.edits.size() == 2);
  CHECK(run.result.text == "John is a maid bride. Mary is a child.");
  CHECK(count_containing(run.result.skipped, "overlaps an earlier edit") == 2);
}

TEST_CASE("the audit trail lists provenance, findings, edits and skips") {
  auto run = run_debias("Arthur is a king. Guinevere is a queen.", fixture_kb());
  auto text = explain(run.findings, run.result.edits, run.result.skipped, fixture_kb(),
                      0.25);
  CHECK(text.find("bookbias 0.1.0 de-bias audit\n") == 0);
  CHECK(text.find("hash=a36c25df25f87159") != std::string::npos);
  CHECK(text.find("tau=2.0000 tau1=0.2500 tau2=0.2500") != std::string::npos);
  CHECK(text.find("epsilon: 0.2500") != std::string::npos);
  CHECK(text.find("findings: 2") != std::string::npos);
  CHECK(text.find("finding 0:") != std::string::npos);
  CHECK(text.find("edits: 0") != std::string::npos);
  CHECK(text.find("skipped: 2") != std::string::npos);
  CHECK(text.find("gender-specific pair; detected, not rewritten") != std::string::npos);

  auto swap = run_debias("John is a doctor. Mary is a nurse.", fixture_kb());
  auto audit = explain(swap.findings, swap.result.edits, swap.result.skipped, fixture_kb(),
                       0.0);
  CHECK(audit.find("edits: 2") != std::string::npos);
  CHECK(audit.find("'doctor' -> 'nurse'") != std::string::npos);
  CHECK(audit.find("occupation-swap") != std::string::npos);
}
