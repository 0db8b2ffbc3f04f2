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

// Irreducibility at exact specializations: the dimension of the generated
// matrix algebra, invariant-line witnesses and the closed-form criteria for
// eta1' and eta2'.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vstlab/linalg.hpp"
#include "vstlab/reps.hpp"

namespace vstlab {

/// Dimension of the unital algebra generated by `mats`. Equal to n^2
/// exactly when the matrices act irreducibly over C.
std::size_t burnside_dimension(std::span<const FieldMatrix> mats);

/// True when every matrix maps span(x) into itself. Throws ConstraintError
/// for the zero vector.
bool invariant_vector_check(std::span<const FieldMatrix> mats, std::span<const Gaussian> x);

/// v != 1.
bool eta1_irreducible_predicate(const LaurentPoly& v);
/// f != v, or w v + f^2 y != v, or v y + w != 1.
bool eta2_irreducible_predicate(const Eta2PrimeParams& p);

enum class Verdict { Irreducible, Reducible };
std::string_view to_string(Verdict v);

struct IrreducibilityReport {
  int n = 0;
  Gaussian t0;
  std::size_t algebra_dimension = 0;
  Verdict verdict = Verdict::Irreducible;
  std::optional<std::vector<Gaussian>> witness;
  /// Expected verdict from the closed-form criterion, for eta1' and eta2'.
  std::optional<Verdict> predicate;

  /// True when a predicate is attached and disagrees with the verdict.
  bool mismatch() const { return predicate && *predicate != verdict; }
};

/// Specializes at t0, computes the algebra dimension and, when reducible,
/// looks for an invariant line among (1, ..., 1), the diagonally weighted
/// all-ones vector and the common fixed vectors of the generators.
IrreducibilityReport decide(const PolyRep& rep, const Gaussian& t0);

/// Same without specialization (no predicate is attached).
IrreducibilityReport decide(const FieldRep& rep);

}  // namespace vstlab
