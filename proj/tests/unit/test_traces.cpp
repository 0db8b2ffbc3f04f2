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

#include <filesystem>
#include <string>

#include "vstlab/io.hpp"
#include "vstlab/search.hpp"
#include "vstlab_test_support.hpp"

using namespace vstlab;

namespace {

RewriteTrace load(const std::string& name) {
  return trace_from_json(testing::read_json(testing::fixture_path("traces/" + name)));
}

std::string fixture_name(int n, const std::string& instance) {
  std::string out = "reduced-n" + std::to_string(n) + "-";
  for (char c : instance) {
    if (c == '[' || c == ',') {
      out += '-';
    } else if (c != ']') {
      out += c;
    }
  }
  return out + ".json";
}

}  // namespace

TEST_CASE("every stored trace except the corrupted one verifies", "[traces]") {
  const auto dir = std::filesystem::path(testing::fixture_path("traces"));
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    const RewriteTrace t = load(name);
    const TraceCheck c = verify_trace(t, presentation_catalog(t.presentation, t.n));
    INFO(name << ": " << c.message);
    CHECK(c.ok == (name.rfind("corrupted", 0) != 0));
    ++count;
  }
  CHECK(count >= 30);
}

TEST_CASE("corrupted trace reports its first step", "[traces]") {
  const RewriteTrace t = load("corrupted-position-n3.json");
  const TraceCheck c = verify_trace(t, presentation_catalog("vstm", 3));
  CHECK_FALSE(c.ok);
  REQUIRE(c.failed_step);
  CHECK(*c.failed_step == 0);
}

TEST_CASE("tau braid certificate", "[traces]") {
  const RewriteTrace t = load("vstm-n3-tss.json");
  CHECK(t.start.to_string() == "t1 s2 s1");
  CHECK(t.end.to_string() == "s2 s1 t2");
  CHECK(verify_trace(t, presentation_catalog("vstm", 3)).ok);
}

TEST_CASE("nu braid certificates", "[traces]") {
  for (const char* name : {"nu-braid-n4-3-1.json", "nu-braid-n5-4-1.json", "nu-braid-n5-4-2.json"}) {
    const RewriteTrace t = load(name);
    INFO(name);
    CHECK(pi_image(t.start) == pi_image(t.end));
    CHECK(verify_trace(t, presentation_catalog("reduced-vstm", t.n)).ok);
  }
}

TEST_CASE("every relation survives the reduced rewriting", "[traces]") {
  for (int n = 3; n <= 4; ++n) {
    const Presentation vstm = presentation_catalog("vstm", n);
    const Presentation reduced = presentation_catalog("reduced-vstm", n);
    for (const auto& r : vstm.relations()) {
      const Word a = to_reduced(r.lhs), b = to_reduced(r.rhs);
      const std::string name = fixture_name(n, r.instance);
      INFO("n=" << n << ' ' << r.instance);
      if (std::filesystem::exists(testing::fixture_path("traces/" + name))) {
        const RewriteTrace t = load(name);
        REQUIRE(t.start == a);
        REQUIRE(t.end == b);
        REQUIRE(verify_trace(t, reduced).ok);
      } else {
        const SearchResult res = search_equiv(a, b, reduced);
        REQUIRE(res.status == SearchStatus::Proved);
        REQUIRE(verify_trace(*res.trace, reduced).ok);
      }
    }
  }
}
