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

// JSON encodings for matrices, words, traces, reports, catalogs and
// representation specifications.

#include <map>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "vstlab/irreducibility.hpp"
#include "vstlab/presentations.hpp"
#include "vstlab/reps.hpp"

namespace vstlab {

using Json = nlohmann::json;

using AnyMatrix = std::variant<PolyMatrix, FieldMatrix>;
using AnyRep = std::variant<PolyRep, FieldRep>;

/// {"ring": "laurent"|"gaussian", "n": n, "entries": [[...], ...]}
template <RingElement R>
Json matrix_to_json(const Matrix<R>& m);
AnyMatrix matrix_from_json(const Json& j);

/// {"n": n, "mode": ..., "alphabet": ..., "letters": [...]}
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

/// Words are written as token strings in the presentation's alphabet.
Json trace_to_json(const RewriteTrace& t);
RewriteTrace trace_from_json(const Json& j);

Json report_to_json(const IrreducibilityReport& r);

Json relation_to_json(const Relation& r);
Json catalog_to_json(const Presentation& p);
Json violations_to_json(const std::vector<Violation>& v);

/// Named representation with string parameters, or explicit images.
struct RepSpec {
  std::string name;  // eta1, eta2, eta1_prime, eta2_prime, upsilon, or empty for images
  int n = 0;
  std::map<std::string, std::string> params;
  std::string mode = "auto";  // eta2_prime: monoid, group or auto
  Json images;                // explicit {"s1": <matrix>, ...}
};

/// Accepts short aliases eta1p, eta2p.
std::string canonical_rep_name(const std::string& name);

/// {"name": ..., "n": ..., "params": {...}, "mode": ...} or {"images": {...}}.
RepSpec rep_spec_from_json(const Json& j);
Json rep_spec_to_json(const RepSpec& s);

/// Builds the representation. eta2_prime in auto mode is a group
/// representation exactly when its tau block is invertible.
AnyRep build_rep(const RepSpec& s);

int strands(const AnyRep& r);

}  // namespace vstlab
