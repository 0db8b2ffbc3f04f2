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

// Homogeneous 2-local representations: the twin-group representations
// eta1 and eta2, their extensions eta1' and eta2', the six complex families
// Upsilon_1..6, and explicit block or image data.

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vstlab/linalg.hpp"
#include "vstlab/presentations.hpp"
#include "vstlab/words.hpp"

namespace vstlab {

struct Eta1Params {};
struct Eta2Params {
  LaurentPoly f;
};
struct Eta1PrimeParams {
  LaurentPoly v;
};
struct Eta2PrimeParams {
  LaurentPoly f;
  LaurentPoly w;
  LaurentPoly y;
  LaurentPoly v;
};
/// Families 2 and 3 use `a` in place of the square root sqrt(1 - bc), so
/// a^2 + bc = 1 is required instead.
struct UpsilonParams {
  int family = 6;
  Gaussian a;
  Gaussian b;
  Gaussian c;
  Gaussian x;
  Gaussian y;
  Gaussian v;
};
struct ExplicitImages {};

using RepOrigin =
    std::variant<ExplicitImages, Eta1Params, Eta2Params, Eta1PrimeParams, Eta2PrimeParams, UpsilonParams>;

template <RingElement R>
class Representation {
 public:
  using Images = std::map<Generator, Matrix<R>>;

  /// Checks that every image is n x n and indexed within 1..n-1.
  Representation(std::string name, int n, RepOrigin origin, Images images);

  const std::string& name() const { return name_; }
  int strands() const { return n_; }
  const RepOrigin& origin() const { return origin_; }
  const Images& images() const { return images_; }

  bool has(Generator g) const { return images_.count(g) != 0; }
  /// Image of a single letter. m, M and g evaluate as S V, V S and T V.
  /// Throws MismatchError when the letter lies outside the domain.
  Matrix<R> image(Generator g) const;

  /// Group when every t_i has a T_i image.
  Mode mode() const;

  /// s_i, t_i, v_i images in index order (the algebra generators).
  std::vector<Matrix<R>> generator_images() const;

 private:
  std::string name_;
  int n_;
  RepOrigin origin_;
  Images images_;
};

using PolyRep = Representation<LaurentPoly>;
using FieldRep = Representation<Gaussian>;

/// s_i -> local [[1-t, t], [2-t, t-1]].
PolyRep rep_eta1(int n);
/// s_i -> local [[0, f], [1/f, 0]]; f must be a unit.
PolyRep rep_eta2(int n, const LaurentPoly& f);
/// eta1 on s_i, t_i -> I, T_i -> I, v_i -> local [[0, v], [1/v, 0]].
PolyRep rep_eta1_prime(int n, const Eta1PrimeParams& p);
/// s as eta2, t -> [[w, f^2 y], [y, w]], v -> [[0, v], [1/v, 0]]. Group
/// mode additionally needs w^2 - f^2 y^2 to be a unit and adds T_i.
PolyRep rep_eta2_prime(int n, const Eta2PrimeParams& p, Mode mode);
/// Throws ConstraintError naming the failed condition.
FieldRep rep_upsilon(const UpsilonParams& p, int n);

/// s_i, t_i, v_i -> local S, T, V. T_i is added when T is invertible
/// (unit determinant over Z[t, t^-1]).
template <RingElement R>
Representation<R> rep_from_blocks(int n, const Matrix<R>& s, const Matrix<R>& t, const Matrix<R>& v,
                                  std::string name = "blocks", RepOrigin origin = ExplicitImages{});

/// 2x2 blocks of the named representations.
Matrix<LaurentPoly> eta1_block();
Matrix<LaurentPoly> anti_diagonal_block(const LaurentPoly& f);
Matrix<LaurentPoly> eta2_tau_block(const Eta2PrimeParams& p);

/// Ordered product of letter images; the empty word gives I_n.
template <RingElement R>
Matrix<R> rep_eval(const Representation<R>& rep, const Word& w);

struct Violation {
  std::string label;
  std::string instance;
  /// True when the determinants already differ.
  bool determinant = false;
};

/// Relations whose two sides have different images, in catalog order.
template <RingElement R>
std::vector<Violation> check_relations(const Representation<R>& rep, const Presentation& pres);

/// Every image X replaced by D^-1 X D, D = diag(d).
template <RingElement R>
Representation<R> conjugate_diag(const Representation<R>& rep, std::span<const R> d);

/// (v^{n-1}, ..., v, 1).
std::vector<LaurentPoly> diagonal_weights(const LaurentPoly& v, int n);

/// Entrywise substitution t -> t0.
FieldRep specialize(const PolyRep& rep, const Gaussian& t0);

}  // namespace vstlab
