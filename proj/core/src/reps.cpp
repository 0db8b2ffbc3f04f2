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

#include "vstlab/reps.hpp"

#include "vstlab/error.hpp"

namespace vstlab {

namespace {

template <RingElement R>
std::optional<Matrix<R>> invert_block(const Matrix<R>& m);

template <>
std::optional<Matrix<LaurentPoly>> invert_block(const Matrix<LaurentPoly>& m) {
  return inverse_unit_2x2(m);
}

template <>
std::optional<Matrix<Gaussian>> invert_block(const Matrix<Gaussian>& m) {
  return inverse(m);
}

LaurentPoly require_unit(const LaurentPoly& p, const char* what) {
  auto inv = p.unit_inverse();
  if (!inv) throw ConstraintError(std::string(what) + " = " + p.to_string() + " is not a unit of Z[t, t^-1]");
  return *inv;
}

void require_strands(int n) {
  if (n < 2) throw ConstraintError("representations need n >= 2, got " + std::to_string(n));
}

}  // namespace

template <RingElement R>
Representation<R>::Representation(std::string name, int n, RepOrigin origin, Images images)
    : name_(std::move(name)), n_(n), origin_(std::move(origin)), images_(std::move(images)) {
  require_strands(n);
  for (const auto& [g, m] : images_) {
    if (g.index < 1 || g.index > n_ - 1) {
      throw ConstraintError("image for " + to_token(g) + " outside 1.." + std::to_string(n_ - 1));
    }
    if (m.size() != static_cast<std::size_t>(n_)) {
      throw MismatchError("image of " + to_token(g) + " is not " + std::to_string(n_) + "x" +
                          std::to_string(n_));
    }
  }
}

template <RingElement R>
Matrix<R> Representation<R>::image(Generator g) const {
  auto lookup = [&](GenKind k) -> const Matrix<R>& {
    auto it = images_.find({k, g.index});
    if (it == images_.end()) {
      throw MismatchError("representation " + name_ + " has no image for " + to_token({k, g.index}));
    }
    return it->second;
  };
  switch (g.kind) {
    case GenKind::Mu: return lookup(GenKind::S) * lookup(GenKind::Nu);
    case GenKind::MuInv: return lookup(GenKind::Nu) * lookup(GenKind::S);
    case GenKind::Gamma: return lookup(GenKind::Tau) * lookup(GenKind::Nu);
    default: return lookup(g.kind);
  }
}

template <RingElement R>
Mode Representation<R>::mode() const {
  for (const auto& [g, m] : images_) {
    if (g.kind == GenKind::Tau && !has({GenKind::TauInv, g.index})) return Mode::Monoid;
  }
  return Mode::Group;
}

template <RingElement R>
std::vector<Matrix<R>> Representation<R>::generator_images() const {
  std::vector<Matrix<R>> out;
  for (GenKind k : {GenKind::S, GenKind::Tau, GenKind::Nu}) {
    for (int i = 1; i <= n_ - 1; ++i) {
      auto it = images_.find({k, i});
      if (it != images_.end()) out.push_back(it->second);
    }
  }
  return out;
}

Matrix<LaurentPoly> eta1_block() {
  const LaurentPoly t = LaurentPoly::t();
  return {{LaurentPoly(1) - t, t}, {LaurentPoly(2) - t, t - LaurentPoly(1)}};
}

Matrix<LaurentPoly> anti_diagonal_block(const LaurentPoly& f) {
  LaurentPoly inv = require_unit(f, "parameter");
  return {{LaurentPoly(0), f}, {inv, LaurentPoly(0)}};
}

Matrix<LaurentPoly> eta2_tau_block(const Eta2PrimeParams& p) {
  return {{p.w, p.f * p.f * p.y}, {p.y, p.w}};
}

namespace {

template <RingElement R>
void embed_all(std::map<Generator, Matrix<R>>& images, GenKind kind, int n, const Matrix<R>& block) {
  for (int i = 1; i <= n - 1; ++i) images[{kind, i}] = local_embed(i, n, block);
}

}  // namespace

PolyRep rep_eta1(int n) {
  require_strands(n);
  PolyRep::Images images;
  embed_all(images, GenKind::S, n, eta1_block());
  return PolyRep("eta1", n, Eta1Params{}, std::move(images));
}

PolyRep rep_eta2(int n, const LaurentPoly& f) {
  require_strands(n);
  require_unit(f, "f");
  PolyRep::Images images;
  embed_all(images, GenKind::S, n, anti_diagonal_block(f));
  return PolyRep("eta2", n, Eta2Params{f}, std::move(images));
}

PolyRep rep_eta1_prime(int n, const Eta1PrimeParams& p) {
  require_strands(n);
  require_unit(p.v, "v");
  PolyRep::Images images;
  embed_all(images, GenKind::S, n, eta1_block());
  embed_all(images, GenKind::Tau, n, PolyMatrix::identity(2));
  embed_all(images, GenKind::TauInv, n, PolyMatrix::identity(2));
  embed_all(images, GenKind::Nu, n, anti_diagonal_block(p.v));
  return PolyRep("eta1_prime", n, p, std::move(images));
}

PolyRep rep_eta2_prime(int n, const Eta2PrimeParams& p, Mode mode) {
  require_strands(n);
  require_unit(p.f, "f");
  require_unit(p.v, "v");
  PolyRep::Images images;
  const PolyMatrix tau = eta2_tau_block(p);
  embed_all(images, GenKind::S, n, anti_diagonal_block(p.f));
  embed_all(images, GenKind::Tau, n, tau);
  embed_all(images, GenKind::Nu, n, anti_diagonal_block(p.v));
  if (mode == Mode::Group) {
    auto inv = inverse_unit_2x2(tau);
    if (!inv) {
      throw ConstraintError("group mode needs an invertible tau block: w^2 - f^2 y^2 = " +
                            det(tau).to_string() + " is not a unit of Z[t, t^-1]");
    }
    embed_all(images, GenKind::TauInv, n, *inv);
  }
  return PolyRep("eta2_prime", n, p, std::move(images));
}

FieldRep rep_upsilon(const UpsilonParams& p, int n) {
  require_strands(n);
  const Gaussian one(1);
  const Gaussian zero(0);
  const FieldMatrix id = FieldMatrix::identity(2);
  auto v_block = [&] {
    if (p.v.is_zero()) throw ConstraintError("Upsilon: v = 0 is not allowed");
    return FieldMatrix{{zero, p.v}, {p.v.inverse(), zero}};
  };
  FieldMatrix s;
  FieldMatrix t = id;
  FieldMatrix v;
  switch (p.family) {
    case 1: {
      if (p.b.is_zero()) throw ConstraintError("Upsilon_1: b = 0 is not allowed");
      const Gaussian b2 = p.b * p.b;
      if ((p.x * p.x - p.y * p.y / b2).is_zero()) {
        throw ConstraintError("Upsilon_1: x^2 - y^2/b^2 = 0 is not allowed");
      }
      s = FieldMatrix{{zero, p.b}, {p.b.inverse(), zero}};
      t = FieldMatrix{{p.x, p.y}, {p.y / b2, p.x}};
      v = v_block();
      break;
    }
    case 2:
    case 3: {
      const Gaussian lhs = p.a * p.a + p.b * p.c;
      if (!(lhs == one)) {
        throw ConstraintError("Upsilon_" + std::to_string(p.family) + ": a^2 + bc = " +
                              lhs.to_string() + " but must equal 1");
      }
      const Gaussian top = p.family == 2 ? -p.a : p.a;
      s = FieldMatrix{{top, p.b}, {p.c, -top}};
      v = v_block();
      break;
    }
    case 4:
      s = FieldMatrix{{Gaussian(-1), zero}, {zero, Gaussian(-1)}};
      v = v_block();
      break;
    case 5:
      s = id;
      v = v_block();
      break;
    case 6:
      s = id;
      v = id;
      break;
    default:
      throw ConstraintError("Upsilon family must be 1..6, got " + std::to_string(p.family));
  }
  return rep_from_blocks(n, s, t, v, "upsilon" + std::to_string(p.family), p);
}

template <RingElement R>
Representation<R> rep_from_blocks(int n, const Matrix<R>& s, const Matrix<R>& t, const Matrix<R>& v,
                                  std::string name, RepOrigin origin) {
  require_strands(n);
  for (const Matrix<R>* m : {&s, &t, &v}) {
    if (m->size() != 2) throw MismatchError("blocks must be 2x2");
  }
  typename Representation<R>::Images images;
  embed_all(images, GenKind::S, n, s);
  embed_all(images, GenKind::Tau, n, t);
  embed_all(images, GenKind::Nu, n, v);
  if (auto inv = invert_block(t)) embed_all(images, GenKind::TauInv, n, *inv);
  return Representation<R>(std::move(name), n, std::move(origin), std::move(images));
}

template <RingElement R>
Matrix<R> rep_eval(const Representation<R>& rep, const Word& w) {
  if (w.strands() != rep.strands()) {
    throw MismatchError("word on " + std::to_string(w.strands()) + " strands, representation on " +
                        std::to_string(rep.strands()));
  }
  auto out = Matrix<R>::identity(static_cast<std::size_t>(rep.strands()));
  for (const auto& g : w.letters()) out = out * rep.image(g);
  return out;
}

template <RingElement R>
std::vector<Violation> check_relations(const Representation<R>& rep, const Presentation& pres) {
  if (pres.strands() != rep.strands()) {
    throw MismatchError("presentation " + pres.name() + " on " + std::to_string(pres.strands()) +
                        " strands, representation on " + std::to_string(rep.strands()));
  }
  std::vector<Violation> out;
  for (const auto& rel : pres.relations()) {
    const Matrix<R> a = rep_eval(rep, rel.lhs);
    const Matrix<R> b = rep_eval(rep, rel.rhs);
    if (!(det(a) == det(b))) {
      out.push_back({rel.label, rel.instance, true});
    } else if (!(a == b)) {
      out.push_back({rel.label, rel.instance, false});
    }
  }
  return out;
}

template <RingElement R>
Representation<R> conjugate_diag(const Representation<R>& rep, std::span<const R> d) {
  if (d.size() != static_cast<std::size_t>(rep.strands())) {
    throw MismatchError("diagonal has " + std::to_string(d.size()) + " entries, expected " +
                        std::to_string(rep.strands()));
  }
  std::vector<R> inv;
  for (const auto& x : d) {
    auto xi = RingTraits<R>::inverse(x);
    if (!xi) throw ConstraintError("diagonal entry " + x.to_string() + " is not invertible");
    inv.push_back(*xi);
  }
  typename Representation<R>::Images images;
  for (const auto& [g, m] : rep.images()) {
    images.emplace(g, conjugate_by_diagonal(m, d, std::span<const R>(inv)));
  }
  return Representation<R>(rep.name(), rep.strands(), rep.origin(), std::move(images));
}

std::vector<LaurentPoly> diagonal_weights(const LaurentPoly& v, int n) {
  std::vector<LaurentPoly> out(static_cast<std::size_t>(n));
  LaurentPoly acc(1);
  for (int k = n - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = acc;
    acc = acc * v;
  }
  return out;
}

FieldRep specialize(const PolyRep& rep, const Gaussian& t0) {
  if (t0.is_zero()) throw ConstraintError("cannot specialize at t = 0");
  FieldRep::Images images;
  for (const auto& [g, m] : rep.images()) {
    images.emplace(g, m.map([&](const LaurentPoly& p) { return p.eval(t0); }));
  }
  return FieldRep(rep.name(), rep.strands(), rep.origin(), std::move(images));
}

template class Representation<LaurentPoly>;
template class Representation<Gaussian>;

template PolyRep rep_from_blocks(int, const PolyMatrix&, const PolyMatrix&, const PolyMatrix&, std::string,
                                 RepOrigin);
template FieldRep rep_from_blocks(int, const FieldMatrix&, const FieldMatrix&, const FieldMatrix&,
                                  std::string, RepOrigin);
template PolyMatrix rep_eval(const PolyRep&, const Word&);
template FieldMatrix rep_eval(const FieldRep&, const Word&);
template std::vector<Violation> check_relations(const PolyRep&, const Presentation&);
template std::vector<Violation> check_relations(const FieldRep&, const Presentation&);
template PolyRep conjugate_diag(const PolyRep&, std::span<const LaurentPoly>);
template FieldRep conjugate_diag(const FieldRep&, std::span<const Gaussian>);

}  // namespace vstlab
