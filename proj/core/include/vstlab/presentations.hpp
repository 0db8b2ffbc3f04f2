/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Relation catalogs for the presentations of VSTM_n, VST_n, the twin and
// singular twin monoids, the reduced presentations and the connecting-string
// monoid M_n; single-step rewriting, trace replay and the translation maps.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vstlab/words.hpp"

namespace vstlab {

/// One instantiated relation lhs = rhs. `label` names the family (`eq22`),
/// `instance` the concrete member (`eq22[1,2]`).
struct Relation {
  std::string label;
  std::string instance;
  Word lhs;
  Word rhs;
};

class Presentation {
 public:
  /// Validates every relation: strands, alphabet and pi-compatibility.
  Presentation(std::string name, int n, Alphabet alphabet, Mode mode,
               std::vector<Relation> relations);

  const std::string& name() const { return name_; }
  int strands() const { return n_; }
  Alphabet alphabet() const { return alphabet_; }
  Mode mode() const { return mode_; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Relations of one family, in catalog order.
  std::vector<const Relation*> family(std::string_view label) const;
  const Relation* instance(std::string_view instance) const;
  bool has_label(std::string_view label) const;

  /// Parses a word in this presentation's alphabet and mode.
  Word word(std::string_view text) const;

 private:
  std::string name_;
  int n_;
  Alphabet alphabet_;
  Mode mode_;
  std::vector<Relation> relations_;
};

/// vstm, vst, twin, stm, st, reduced-vstm, mn, reduced-mn.
const std::vector<std::string>& presentation_names();

/// Throws ConstraintError for an unknown name or n < 2.
Presentation presentation_catalog(std::string_view name, int n);

/// Standard word for s_k, t_k, T_k (or connecting word for m_k, M_k, g_k)
/// written with index-1 letters and virtual generators only.
Word derive_generator(GenKind kind, int index, int n);

/// Reduced-alphabet word read as a standard word (or reduced-connecting as
/// connecting). The letters are unchanged.
Word expand_reduced(const Word& w);

/// Standard word rewritten into the reduced alphabet by substituting
/// derive_generator for every s_k, t_k, T_k with k >= 2 (connecting words
/// likewise into the reduced-connecting alphabet).
Word to_reduced(const Word& w);

/// F: v_i -> v_i, m_i -> s_i v_i, M_i -> v_i s_i, g_i -> t_i v_i.
Word map_F(const Word& w);

/// G: v_i -> v_i, s_i -> m_i v_i, t_i -> g_i v_i. Rejects T_i.
Word map_G(const Word& w);

enum class Direction { LeftToRight, RightToLeft };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view text);

/// Replaces the source side of `rel` found at `pos` by the other side.
/// Throws MismatchError when the source side does not occur there.
Word rewrite_step(const Word& w, const Relation& rel, Direction dir, std::size_t pos);

struct TraceStep {
  std::string label;  // family label or instance label
  Direction dir = Direction::LeftToRight;
  std::size_t pos = 0;
};

struct RewriteTrace {
  std::string presentation;
  int n = 2;
  Word start;
  Word end;
  std::vector<TraceStep> steps;
};

struct TraceCheck {
  bool ok = false;
  /// Index of the first failing step; equals steps.size() when every step
  /// applied but the final word differs from `end`.
  std::optional<std::size_t> failed_step;
  std::string message;
  std::vector<Word> words;  // start followed by the word after each applied step
};

/// Replays `trace`. A family label is resolved to the member whose source
/// side matches at the step position. Throws ConstraintError for labels
/// absent from `pres`.
TraceCheck verify_trace(const RewriteTrace& trace, const Presentation& pres);

}  // namespace vstlab
