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

#include <span>
#include <string>
#include <vector>

#include "bookbias/analogy.hpp"
#include "bookbias/analysis.hpp"
#include "bookbias/graph.hpp"
#include "bookbias/types.hpp"

namespace bookbias::debias {

// A stereotype-consistent association between a character and a knowledge-
// base pair slot: a male character's term matching x, or a female
// character's term matching y. Counter-stereotypical assignments (a female
// doctor) are deliberately not flagged.
struct BiasFinding {
  int entity_index = -1;
  std::string character;
  GenderLabel gender = GenderLabel::Unknown;
  std::string term;           // stemmed term that matched
  analogy::AnalogicalPair kb_pair;
  char slot = 'x';            // which side of the pair matched
  std::size_t begin = 0;      // byte span of the matched occurrence
  std::size_t end = 0;
  std::string source;         // "verb" | "object" | "occupation"
};

enum class EditReason { RoleInterchange, OccupationSwap, PronounRepair };

const char* to_string(EditReason r);

struct DebiasEdit {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string original;
  std::string replacement;
  EditReason reason = EditReason::RoleInterchange;
};

// Scans the document's character terms (verb lemmas, object lemmas and
// occupation nouns) against the knowledge base. Findings are deterministic
// and ordered by span.
std::vector<BiasFinding> detect_bias(const analysis::DocumentAnalysis& doc,
                                     const analogy::KnowledgeBase& kb);

struct RewriteResult {
  std::string text;
  std::vector<DebiasEdit> edits;       // applied, non-overlapping, span order
  std::vector<std::string> skipped;    // findings left in place, with reasons
};

// Interchanges matched terms across a centrality-matched male-female pair,
// but only for gender-neutral findings whose two slots are both present
// (doctor <-> nurse across John/Mary). Gender-specific findings are never
// rewritten. Bytes outside the edit spans are untouched. When whole names
// are exchanged, attached gendered pronouns are repaired as well.
RewriteResult rewrite(const analysis::DocumentAnalysis& doc,
                      std::span<const BiasFinding> findings,
                      const graph::CharacterGraph& graph, double epsilon);

// Human-readable audit: one line per finding and per edit, with spans,
// knowledge-base provenance and the thresholds used.
std::string explain(std::span<const BiasFinding> findings, std::span<const DebiasEdit> edits,
                    std::span<const std::string> skipped, const analogy::KnowledgeBase& kb,
                    double epsilon);

}  // namespace bookbias::debias
