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


#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "vstlab/error.hpp"
#include "vstlab/reps.hpp"
#include "vstlab_test_support.hpp"

using namespace vstlab;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

std::vector<std::string> labels(const std::vector<Violation>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.label);
  return out;
}

UpsilonParams random_upsilon(testing::Random& rng, int family) {
  UpsilonParams p;
  p.family = family;
  p.v = rng.nonzero_gaussian(5);
  switch (family) {
    case 1:
      p.b = rng.nonzero_gaussian(5);
      do {
        p.x = rng.gaussian(5);
        p.y = rng.gaussian(5);
      } while ((p.x * p.x - p.y * p.y / (p.b * p.b)).is_zero());
      break;
    case 2:
    case 3:
      p.a = rng.gaussian(5);
      p.b = rng.nonzero_gaussian(5);
      p.c = (Gaussian(1) - p.a * p.a) / p.b;
      break;
    default:
      break;
  }
  return p;
}

Word W(const char* s, int n) { return Word::parse(s, n); }

}  // namespace

TEST_CASE("twin group representations", "[reps]") {
  const PolyRep eta1 = rep_eta1(3);
  const PolyMatrix s2 = eta1.image({GenKind::S, 2});
  CHECK(s2 == local_embed(2, 3, eta1_block()));
  CHECK(s2(1, 1) == P("1-t"));
  CHECK(s2(2, 1) == P("2-t"));
  CHECK(rep_eval(eta1, Word::parse("s1 s1", 3)).is_identity());
  const PolyRep eta1_4 = rep_eta1(4);
  CHECK(rep_eval(eta1_4, W("s1 s3", 4)) == rep_eval(eta1_4, W("s3 s1", 4)));

  const PolyRep eta2 = rep_eta2(3, P("t"));
  CHECK(eta2.image({GenKind::S, 1}) == local_embed(1, 3, PolyMatrix{{P("0"), P("t")}, {P("t^-1"), P("0")}}));
  CHECK(anti_diagonal_block(P("-1")) == PolyMatrix{{P("0"), P("-1")}, {P("-1"), P("0")}});
  CHECK(anti_diagonal_block(P("t^3")) * anti_diagonal_block(P("t^3")) == PolyMatrix::identity(2));
  CHECK_THROWS_AS(rep_eta2(3, P("1+t")), ConstraintError);
  CHECK_THROWS_AS(rep_eta1(1), ConstraintError);
}

TEST_CASE("eta1 prime images", "[reps]") {
  const PolyRep r = rep_eta1_prime(4, {P("t")});
  CHECK(r.image({GenKind::Tau, 2}).is_identity());
  CHECK(r.image({GenKind::TauInv, 2}).is_identity());
  CHECK(r.mode() == Mode::Group);
  CHECK(rep_eval(r, W("t1 t2 t1", 4)).is_identity());
  CHECK(rep_eval(r, W("s1 s1", 4)).is_identity());
  const PolyRep r3 = rep_eta1_prime(3, {P("t")});
  CHECK((r3.image({GenKind::Nu, 1}) * r3.image({GenKind::Nu, 1})).is_identity());
  CHECK(check_relations(r, presentation_catalog("vst", 4)).empty());
  CHECK_THROWS_AS(rep_eta1_prime(3, {P("1+t")}), ConstraintError);
}

TEST_CASE("eta2 prime images", "[reps]") {
  CHECK(eta2_tau_block({P("1"), P("0"), P("1"), P("1")}) == PolyMatrix{{P("0"), P("1")}, {P("1"), P("0")}});
  const Eta2PrimeParams p{P("t"), P("1"), P("t"), P("t^2")};
  const PolyRep r = rep_eta2_prime(4, p, Mode::Monoid);
  CHECK(check_relations(r, presentation_catalog("vstm", 4)).empty());
  CHECK(r.image({GenKind::S, 2}) == rep_eta2(4, P("t")).image({GenKind::S, 2}));
  CHECK(rep_eval(r, W("s1 t1", 4)) == rep_eval(r, W("t1 s1", 4)));
  CHECK_FALSE(r.has({GenKind::TauInv, 1}));
  CHECK_THROWS_AS(rep_eval(r, W("T1", 4)), MismatchError);
  // w^2 - f^2 y^2 = 1 - t^4 is not a unit.
  CHECK_THROWS_AS(rep_eta2_prime(4, p, Mode::Group), ConstraintError);
  const PolyRep g = rep_eta2_prime(3, {P("t"), P("t"), P("0"), P("-1")}, Mode::Group);
  CHECK(g.mode() == Mode::Group);
  CHECK((g.image({GenKind::Tau, 1}) * g.image({GenKind::TauInv, 1})).is_identity());
  CHECK(check_relations(g, presentation_catalog("vst", 3)).empty());
  CHECK_THROWS_AS(rep_eta2_prime(3, {P("2t"), P("1"), P("1"), P("t")}, Mode::Monoid), ConstraintError);
  CHECK_THROWS_AS(rep_eta2_prime(3, {P("t"), P("1"), P("1"), P("0")}, Mode::Monoid), ConstraintError);
}

TEST_CASE("upsilon families", "[reps]") {
  UpsilonParams four;
  four.family = 4;
  four.v = Gaussian(3);
  const FieldRep r4 = rep_upsilon(four, 3);
  CHECK(r4.image({GenKind::S, 1}) == local_embed(1, 3, FieldMatrix{{-1, 0}, {0, -1}}));
  CHECK(r4.image({GenKind::Tau, 2}).is_identity());
  CHECK(r4.image({GenKind::Nu, 1}) == local_embed(1, 3, FieldMatrix{{0, 3}, {Gaussian(Rational(1, 3)), 0}}));

  UpsilonParams six;
  const FieldRep r6 = rep_upsilon(six, 4);
  for (const auto& [g, m] : r6.images()) CHECK(m.is_identity());

  UpsilonParams two;
  two.family = 2;
  two.a = Gaussian(Rational(3, 5));
  two.b = Gaussian(Rational(4, 5));
  two.c = Gaussian(Rational(4, 5));
  two.v = Gaussian(2);
  CHECK(check_relations(rep_upsilon(two, 4), presentation_catalog("vst", 4)).empty());

  UpsilonParams five;
  five.family = 5;
  five.v = Gaussian(7);
  CHECK(check_relations(rep_upsilon(five, 4), presentation_catalog("vst", 4)).empty());

  UpsilonParams bad = two;
  bad.c = Gaussian(1);
  CHECK_THROWS_AS(rep_upsilon(bad, 3), ConstraintError);
  UpsilonParams one;
  one.family = 1;
  one.b = Gaussian(0);
  one.v = Gaussian(1);
  CHECK_THROWS_AS(rep_upsilon(one, 3), ConstraintError);
  one.b = Gaussian(2);
  one.x = Gaussian(1);
  one.y = Gaussian(2);
  CHECK_THROWS_AS(rep_upsilon(one, 3), ConstraintError);
  one.y = Gaussian(1);
  CHECK_NOTHROW(rep_upsilon(one, 3));
  one.v = Gaussian(0);
  CHECK_THROWS_AS(rep_upsilon(one, 3), ConstraintError);
  UpsilonParams seven;
  seven.family = 7;
  CHECK_THROWS_AS(rep_upsilon(seven, 3), ConstraintError);
}

TEST_CASE("block representations", "[reps]") {
  const PolyMatrix id = PolyMatrix::identity(2);
  const PolyRep trivial = rep_from_blocks(3, id, id, id);
  CHECK(check_relations(trivial, presentation_catalog("vst", 3)).empty());

  const PolyRep rebuilt = rep_from_blocks(4, eta1_block(), id, anti_diagonal_block(P("t")));
  CHECK(rebuilt.images() == rep_eta1_prime(4, {P("t")}).images());

  const PolyMatrix unipotent{{P("1"), P("1")}, {P("0"), P("1")}};
  const auto v1 = check_relations(rep_from_blocks(3, unipotent, id, id), presentation_catalog("vstm", 3));
  const auto l1 = labels(v1);
  CHECK(std::count(l1.begin(), l1.end(), "eq20-s") == 2);

  const PolyMatrix stretched{{P("0"), P("1")}, {P("2"), P("0")}};
  const auto v2 = check_relations(rep_from_blocks(3, id, id, stretched), presentation_catalog("vstm", 3));
  const auto l2 = labels(v2);
  CHECK(std::find(l2.begin(), l2.end(), "eq20-nu") != l2.end());
  bool det_flag = false;
  for (const auto& v : v2) det_flag = det_flag || (v.label == "eq20-nu" && v.determinant);
  CHECK(det_flag);

  CHECK_THROWS_AS(rep_from_blocks(3, PolyMatrix::identity(3), id, id), MismatchError);
}

TEST_CASE("every representation preserves its catalog", "[reps]") {
  testing::Random rng(53);
  for (int n = 3; n <= 5; ++n) {
    INFO("n=" << n);
    const Presentation twin = presentation_catalog("twin", n);
    const Presentation vst = presentation_catalog("vst", n);
    const Presentation vstm = presentation_catalog("vstm", n);
    CHECK(check_relations(rep_eta1(n), twin).empty());
    for (int k = 0; k < 3; ++k) {
      CHECK(check_relations(rep_eta2(n, rng.unit()), twin).empty());
      CHECK(check_relations(rep_eta1_prime(n, {rng.unit()}), vst).empty());
      const Eta2PrimeParams p{rng.unit(), rng.laurent(2, 2, 2), rng.laurent(2, 2, 2), rng.unit()};
      CHECK(check_relations(rep_eta2_prime(n, p, Mode::Monoid), vstm).empty());
      const Eta2PrimeParams q{rng.unit(), rng.unit(), LaurentPoly(), rng.unit()};
      CHECK(check_relations(rep_eta2_prime(n, q, Mode::Group), vst).empty());
    }
    for (int family = 1; family <= 6; ++family) {
      INFO("family " << family);
      CHECK(check_relations(rep_upsilon(random_upsilon(rng, family), n), vst).empty());
    }
  }
}

TEST_CASE("diagonal conjugation", "[reps]") {
  const LaurentPoly v = P("-t^2");
  const PolyRep r = rep_eta1_prime(4, {v});
  const std::vector<LaurentPoly> ones(4, LaurentPoly(1));
  CHECK(conjugate_diag(r, std::span<const LaurentPoly>(ones)).images() == r.images());
  const auto d = diagonal_weights(v, 4);
  CHECK(d == std::vector<LaurentPoly>{P("-t^6"), P("t^4"), P("-t^2"), P("1")});
  const PolyRep c = conjugate_diag(r, std::span<const LaurentPoly>(d));
  CHECK(c.image({GenKind::Nu, 2}) == local_embed(2, 4, PolyMatrix{{P("0"), P("1")}, {P("1"), P("0")}}));
  const PolyMatrix s_block{{P("1-t"), P("t") * *v.unit_inverse()}, {P("2-t") * v, P("t-1")}};
  CHECK(c.image({GenKind::S, 3}) == local_embed(3, 4, s_block));
  const std::vector<LaurentPoly> bad{P("1"), P("1+t"), P("1"), P("1")};
  CHECK_THROWS_AS(conjugate_diag(r, std::span<const LaurentPoly>(bad)), ConstraintError);
}

TEST_CASE("relation checks are conjugation invariant", "[reps]") {
  testing::Random rng(59);
  const Presentation vstm = presentation_catalog("vstm", 4);
  for (int k = 0; k < 10; ++k) {
    std::vector<LaurentPoly> d;
    for (int i = 0; i < 4; ++i) d.push_back(rng.unit());
    const Eta2PrimeParams p{rng.unit(), rng.laurent(2, 2, 2), rng.laurent(2, 2, 2), rng.unit()};
    const PolyRep good = rep_eta2_prime(4, p, Mode::Monoid);
    CHECK(check_relations(conjugate_diag(good, std::span<const LaurentPoly>(d)), vstm).empty());
    const PolyMatrix id = PolyMatrix::identity(2);
    const PolyRep bad = rep_from_blocks(4, PolyMatrix{{P("1"), P("t")}, {P("0"), P("1")}}, id, id);
    CHECK(labels(check_relations(bad, vstm)) ==
          labels(check_relations(conjugate_diag(bad, std::span<const LaurentPoly>(d)), vstm)));
  }
}

TEST_CASE("evaluation is a homomorphism", "[reps]") {
  testing::Random rng(61);
  const PolyRep r = rep_eta2_prime(4, {P("t"), P("1-t"), P("2"), P("-t^-1")}, Mode::Monoid);
  for (int k = 0; k < 50; ++k) {
    const Word u = rng.word(4, Alphabet::Standard, Mode::Monoid, 5);
    const Word w = rng.word(4, Alphabet::Standard, Mode::Monoid, 5);
    REQUIRE(rep_eval(r, u * w) == rep_eval(r, u) * rep_eval(r, w));
  }
  CHECK(rep_eval(r, Word(4, Alphabet::Standard, Mode::Monoid)).is_identity());
  CHECK_THROWS_AS(rep_eval(r, W("s1", 3)), MismatchError);
}

TEST_CASE("connecting letters evaluate through their definitions", "[reps]") {
  const PolyRep r = rep_eta2_prime(3, {P("t"), P("1"), P("t"), P("t^2")}, Mode::Monoid);
  const Word m = Word::parse("m1 M2 g1", 3, Alphabet::Connecting);
  CHECK(rep_eval(r, m) == rep_eval(r, map_F(m)));
}

TEST_CASE("unfaithfulness witness", "[reps]") {
  for (int n = 3; n <= 5; ++n) {
    const Word t1 = W("t1", n);
    CHECK(rep_eval(rep_eta1_prime(n, {P("t")}), t1).is_identity());
    CHECK_FALSE(free_reduce(t1).empty());
    CHECK_FALSE(pi_image(t1).is_identity());
  }
}

TEST_CASE("restrictions agree with the twin group representations", "[reps]") {
  for (int n = 3; n <= 5; ++n) {
    const PolyRep a = rep_eta1_prime(n, {P("t^-1")});
    const PolyRep b = rep_eta2_prime(n, {P("-t"), P("1"), P("0"), P("t")}, Mode::Monoid);
    for (int i = 1; i < n; ++i) {
      CHECK(a.image({GenKind::S, i}) == rep_eta1(n).image({GenKind::S, i}));
      CHECK(b.image({GenKind::S, i}) == rep_eta2(n, P("-t")).image({GenKind::S, i}));
    }
  }
}
