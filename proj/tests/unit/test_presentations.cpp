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


#include <catch2/catch_amalgamated.hpp>

#include "vstlab/error.hpp"
#include "vstlab/presentations.hpp"
#include "vstlab/search.hpp"
#include "vstlab_test_support.hpp"

using namespace vstlab;

TEST_CASE("catalog sizes and contents", "[presentations]") {
  const Presentation vstm = presentation_catalog("vstm", 3);
  CHECK(vstm.relations().size() == 11);
  for (const char* label : {"comm-ss", "comm-st", "comm-sv", "comm-tt", "comm-tv", "comm-vv"}) {
    CHECK(vstm.family(label).empty());
  }
  CHECK(vstm.family("eq22").size() == 2);
  CHECK(vstm.family("eq20-s").size() == 2);

  const Presentation twin = presentation_catalog("twin", 2);
  REQUIRE(twin.relations().size() == 1);
  CHECK(twin.relations()[0].lhs.to_string() == "s1 s1");
  CHECK(twin.relations()[0].rhs.empty());

  const Presentation reduced = presentation_catalog("reduced-vstm", 5);
  const Relation* eq41 = reduced.instance("eq41");
  REQUIRE(eq41 != nullptr);
  CHECK(eq41->lhs.to_string() == "t1 v1 v2 s1 v2 v1 s1");
  CHECK(eq41->rhs.to_string() == "v1 v2 s1 v2 v1 s1 v1 v2 t1 v2 v1");

  const Presentation vst = presentation_catalog("vst", 3);
  CHECK(vst.mode() == Mode::Group);
  CHECK(vst.has_label("inv-t-r"));
  CHECK(vst.relations().size() == 15);

  const Presentation vstm5 = presentation_catalog("vstm", 5);
  // comm-ss over ordered index pairs with |i - j| >= 2: (1,3),(1,4),(2,4) each way, deduplicated.
  CHECK(vstm5.family("comm-ss").size() == 3);
  CHECK(vstm5.family("comm-st").size() == 6);

  CHECK_THROWS_AS(presentation_catalog("vstm", 1), ConstraintError);
  CHECK_THROWS_AS(presentation_catalog("braid", 3), ConstraintError);
}

TEST_CASE("every catalog relation is pi-compatible", "[presentations]") {
  for (const auto& name : presentation_names()) {
    for (int n = 2; n <= 6; ++n) {
      const Presentation p = presentation_catalog(name, n);
      for (const auto& r : p.relations()) {
        INFO(name << " n=" << n << ' ' << r.instance);
        REQUIRE(pi_image(r.lhs) == pi_image(r.rhs));
        REQUIRE(r.lhs.strands() == n);
        REQUIRE(r.lhs.alphabet() == p.alphabet());
        REQUIRE(r.rhs.alphabet() == p.alphabet());
      }
    }
  }
}

TEST_CASE("presentation rejects incompatible relations", "[presentations]") {
  const Word s1 = Word::parse("s1", 3);
  const Word t2 = Word::parse("t2", 3);
  CHECK_THROWS_AS(Presentation("bad", 3, Alphabet::Standard, Mode::Group, {{"x", "x", s1, t2}}),
                  ConstraintError);
  CHECK_THROWS_AS(Presentation("bad", 4, Alphabet::Standard, Mode::Group, {{"x", "x", s1, s1}}),
                  MismatchError);
}

TEST_CASE("derived generators", "[presentations]") {
  CHECK(derive_generator(GenKind::S, 2, 3).to_string() == "v1 v2 s1 v2 v1");
  CHECK(derive_generator(GenKind::S, 2, 5).to_string() == "v1 v2 s1 v2 v1");
  CHECK(derive_generator(GenKind::Tau, 3, 4).to_string() == "v2 v1 v3 v2 t1 v2 v3 v1 v2");
  CHECK(derive_generator(GenKind::S, 1, 4).to_string() == "s1");
  CHECK(derive_generator(GenKind::TauInv, 2, 3).to_string() == "v1 v2 T1 v2 v1");
  CHECK(derive_generator(GenKind::Mu, 2, 3).alphabet() == Alphabet::Connecting);
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (GenKind k : {GenKind::S, GenKind::Tau, GenKind::Mu, GenKind::Gamma}) {
        const Word d = derive_generator(k, i, n);
        const Word single(n, d.alphabet(), Mode::Group, {{k, i}});
        REQUIRE(pi_image(d) == pi_image(single));
      }
    }
  }
  CHECK_THROWS_AS(derive_generator(GenKind::S, 3, 3), ConstraintError);
}

TEST_CASE("reduced words", "[presentations]") {
  const Word r = Word::parse("s1 v3 t1", 4, Alphabet::Reduced);
  const Word e = expand_reduced(r);
  CHECK(e.alphabet() == Alphabet::Standard);
  CHECK(e.to_string() == "s1 v3 t1");
  CHECK_THROWS_AS(expand_reduced(Word::parse("s1", 3)), MismatchError);
  CHECK(to_reduced(Word::parse("s2 v1", 3)).to_string() == "v1 v2 s1 v2 v1 v1");
  CHECK(to_reduced(Word::parse("s2 v1", 3)).alphabet() == Alphabet::Reduced);
}

TEST_CASE("translation maps", "[presentations]") {
  const Word m1 = Word::parse("m1", 3, Alphabet::Connecting, Mode::Monoid);
  CHECK(map_F(m1).to_string() == "s1 v1");
  CHECK(map_G(map_F(m1)).to_string() == "m1 v1 v1");
  CHECK(free_reduce(map_G(map_F(m1))) == m1);
  const Word s2v1 = Word::parse("s2 v1", 3, Alphabet::Standard, Mode::Monoid);
  CHECK(free_reduce(map_F(map_G(s2v1))).to_string() == "s2 v1");
  CHECK(map_F(Word::parse("M2 g1", 3, Alphabet::Connecting)).to_string() == "v2 s2 t1 v1");
  CHECK_THROWS_AS(map_G(Word::parse("T1", 3)), ConstraintError);
  CHECK_THROWS_AS(map_F(Word::parse("s1", 3)), MismatchError);
  CHECK_THROWS_AS(map_G(m1), MismatchError);
}

TEST_CASE("single rewriting steps", "[presentations]") {
  const Presentation vstm = presentation_catalog("vstm", 3);
  const Word a = rewrite_step(vstm.word("s1 v1 v1 t2"), *vstm.instance("eq20-nu[1]"),
                              Direction::LeftToRight, 1);
  CHECK(a.to_string() == "s1 t2");
  const Word b = rewrite_step(vstm.word("t2 s1 s2"), *vstm.instance("eq22[1,2]"),
                              Direction::RightToLeft, 0);
  CHECK(b.to_string() == "s1 s2 t1");
  const Relation* braid = vstm.family("eq23").front();
  const Word c = rewrite_step(vstm.word("v1 v2 v1"), *braid,
                              braid->lhs.to_string() == "v1 v2 v1" ? Direction::LeftToRight
                                                                   : Direction::RightToLeft,
                              0);
  CHECK(c.to_string() == "v2 v1 v2");
  CHECK_THROWS_AS(rewrite_step(vstm.word("s1 t2"), *vstm.instance("eq20-nu[1]"),
                               Direction::LeftToRight, 0),
                  MismatchError);
  const Word d = rewrite_step(vstm.word("s1 t1"), *vstm.instance("eq20-nu[2]"),
                              Direction::RightToLeft, 2);
  CHECK(d.to_string() == "s1 t1 v2 v2");
}

TEST_CASE("trace replay", "[presentations]") {
  const Presentation vstm = presentation_catalog("vstm", 3);
  RewriteTrace empty{"vstm", 3, vstm.word("s1 v2"), vstm.word("s1 v2"), {}};
  CHECK(verify_trace(empty, vstm).ok);

  RewriteTrace good{"vstm", 3, vstm.word("s1 s2 t1 v1 v1"), vstm.word("t2 s1 s2"),
                    {{"eq22", Direction::LeftToRight, 0}, {"eq20-nu[1]", Direction::LeftToRight, 3}}};
  const TraceCheck ok = verify_trace(good, vstm);
  CHECK(ok.ok);
  CHECK(ok.words.size() == 3);

  RewriteTrace bad = good;
  bad.steps[0].pos = 1;
  const TraceCheck fail = verify_trace(bad, vstm);
  CHECK_FALSE(fail.ok);
  REQUIRE(fail.failed_step);
  CHECK(*fail.failed_step == 0);
  CHECK_FALSE(fail.message.empty());

  RewriteTrace wrong_end = good;
  wrong_end.end = vstm.word("t2 s1 s2 v1 v1");
  const TraceCheck end_fail = verify_trace(wrong_end, vstm);
  CHECK_FALSE(end_fail.ok);
  CHECK(end_fail.failed_step == std::optional<std::size_t>(2));

  RewriteTrace unknown = good;
  unknown.steps[0].label = "eq99";
  CHECK_THROWS_AS(verify_trace(unknown, vstm), ConstraintError);
}

TEST_CASE("verified traces preserve the permutation", "[presentations]") {
  testing::Random rng(43);
  for (const char* name : {"vstm", "vst", "mn", "reduced-vstm"}) {
    const Presentation p = presentation_catalog(name, 4);
    for (int k = 0; k < 100; ++k) {
      Word w = rng.word(4, p.alphabet(), p.mode(), 6);
      RewriteTrace t{name, 4, w, w, {}};
      for (int step = 0; step < 5; ++step) {
        const Relation& r = p.relations()[static_cast<std::size_t>(
            rng.integer(0, static_cast<int>(p.relations().size()) - 1))];
        // Insert the relation's source side, then rewrite it.
        const Direction dir = rng.integer(0, 1) == 0 ? Direction::LeftToRight : Direction::RightToLeft;
        const Word& src = dir == Direction::LeftToRight ? r.lhs : r.rhs;
        const std::size_t pos = static_cast<std::size_t>(rng.integer(0, static_cast<int>(w.size())));
        auto letters = w.letters();
        letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), src.letters().begin(),
                       src.letters().end());
        const Word before = w.with_letters(letters);
        REQUIRE(pi_image(rewrite_step(before, r, dir, pos)) == pi_image(before));
        w = rewrite_step(before, r, dir, pos);
      }
    }
  }
}

TEST_CASE("derived relations follow from the catalog", "[presentations]") {
  const Presentation vstm = presentation_catalog("vstm", 4);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (std::abs(i - j) != 1) continue;
      for (char k : {'s', 't'}) {
        const std::string si = std::string(1, k) + std::to_string(i);
        const std::string sj = std::string(1, k) + std::to_string(j);
        const std::string vi = "v" + std::to_string(i), vj = "v" + std::to_string(j);
        const Word u = vstm.word(si + " " + vj + " " + vi);
        const Word w = vstm.word(vj + " " + vi + " " + sj);
        const SearchResult r = search_equiv(u, w, vstm);
        INFO(u.to_string() << " = " << w.to_string());
        REQUIRE(r.status == SearchStatus::Proved);
        REQUIRE(verify_trace(*r.trace, vstm).ok);
      }
      const Word u = vstm.word("s" + std::to_string(i) + " t" + std::to_string(j) + " s" + std::to_string(i));
      const Word w = vstm.word("s" + std::to_string(j) + " t" + std::to_string(i) + " s" + std::to_string(j));
      const SearchResult r = search_equiv(u, w, vstm);
      INFO(u.to_string() << " = " << w.to_string());
      REQUIRE(r.status == SearchStatus::Proved);
      REQUIRE(verify_trace(*r.trace, vstm).ok);
    }
  }
}
