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

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vstlab_cli/cli.hpp"
#include "vstlab_test_support.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = vstlab::cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  // Payload is valid JSON whenever the command did not fail on input.
  const bool plain = std::find(args.begin(), args.end(), "text") != args.end() ||
                     std::find(args.begin(), args.end(), "--help") != args.end();
  if (r.code <= 1 && !args.empty() && !plain) {
    REQUIRE(nlohmann::json::accept(r.out));
  }
  return r;
}

std::string trace(const char* name) { return vstlab::testing::fixture_path(std::string("traces/") + name); }

}  // namespace

TEST_CASE("cli pi", "[cli]") {
  Run r = run({"pi", "-n", "3", "s1 v2 s1"});
  CHECK(r.code == 0);
  CHECK(r.json().at("images") == nlohmann::json({3, 2, 1}));
  CHECK(r.json().at("pure") == false);
  CHECK(run({"pi", "-n", "3", "e"}).json().at("pure") == true);
  CHECK(run({"pi", "-n", "3", "t1 t1"}).json().at("images") == nlohmann::json({1, 2, 3}));
  r = run({"--format", "text", "pi", "-n", "3", "s1 v2 s1"});
  CHECK(r.out == "[3, 2, 1]\npure: false\n");
  CHECK(run({"pi", "-n", "3", "s7"}).code == 2);
  CHECK(run({"pi", "-n", "3", "q1"}).code == 2);
  CHECK(run({"pi", "s1"}).code == 2);
}

TEST_CASE("cli check-rep", "[cli]") {
  Run r = run({"check-rep", "--rep", "eta1p", "--v", "t", "-n", "4", "--presentation", "vst"});
  CHECK(r.code == 0);
  CHECK(r.json() == nlohmann::json::array());
  CHECK(run({"check-rep", "--rep", "upsilon", "--family", "6", "-n", "3"}).code == 0);
  r = run({"check-rep", "--rep", "eta1p", "--v", "1+t", "-n", "3"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  r = run({"check-rep", "--rep-file", vstlab::testing::fixture_path("reps/bad-nu-n2.json"), "--presentation",
           "vst"});
  CHECK(r.code == 1);
  CHECK(r.json() == nlohmann::json({"eq20-nu[1]"}));
  CHECK(run({"check-rep", "--rep", "upsilon", "--family", "1", "-n", "3"}).code == 2);
  CHECK(run({"check-rep", "-n", "3"}).code == 2);
}

TEST_CASE("cli irreducible", "[cli]") {
  Run r = run({"irreducible", "--rep", "eta1p", "--v", "1", "--at", "3", "-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.json().at("verdict") == "reducible");
  CHECK(r.json().at("witness") == nlohmann::json({"1", "1", "1", "1"}));
  r = run({"irreducible", "--rep", "eta1p", "--v", "t", "--at", "3", "-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.json().at("verdict") == "irreducible");
  CHECK(r.json().at("algebra_dimension") == 9);
  CHECK(run({"irreducible", "--rep", "eta1p", "--v", "t", "--at", "0", "-n", "3"}).code == 2);
  CHECK(run({"irreducible", "--rep", "eta1p", "--v", "t", "-n", "3"}).code == 2);
  r = run({"irreducible", "--rep", "upsilon", "--family", "6", "-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.json().at("verdict") == "reducible");
}

TEST_CASE("cli eval", "[cli]") {
  Run r = run({"eval", "--rep", "eta1p", "--v", "t", "-n", "3", "t1"});
  CHECK(r.code == 0);
  CHECK(r.json().at("entries") == nlohmann::json({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));
}

TEST_CASE("cli convert and derive", "[cli]") {
  CHECK(run({"convert", "--from", "connecting", "--to", "standard", "-n", "3", "m1"}).json().at("word") == "s1 v1");
  CHECK(run({"convert", "--from", "standard", "--to", "connecting", "-n", "3", "s1 v1", "--word-mode", "monoid"})
            .json()
            .at("word") == "m1");
  CHECK(run({"convert", "--from", "reduced", "--to", "standard", "-n", "4", "s2"}).code == 2);
  CHECK(run({"convert", "--from", "reduced", "--to", "connecting", "-n", "4", "s1"}).code == 2);
  CHECK(run({"derive", "--kind", "s", "--index", "2", "-n", "4"}).json().at("word") == "v1 v2 s1 v2 v1");
  CHECK(run({"derive", "--kind", "q", "--index", "2", "-n", "4"}).code == 2);
}

TEST_CASE("cli search", "[cli]") {
  Run r = run({"search-equiv", "-n", "3", "t1 s2 s1", "s2 s1 t2"});
  CHECK(r.code == 0);
  CHECK(r.json().at("status") == "proved");
  CHECK(r.json().at("trace").at("start") == "t1 s2 s1");
  r = run({"search-equiv", "-n", "3", "s1", "s2"});
  CHECK(r.code == 0);
  CHECK(r.json().at("status") == "distinct");
  CHECK(r.json().at("trace").is_null());
  r = run({"search-equiv", "-n", "3", "s1 s1", "e", "--via", "s1 s1", "--via", "s1 s1"});
  CHECK(r.json().at("status") == "proved");
  CHECK(run({"search-equiv", "-n", "3", "s1"}).code == 2);
}

TEST_CASE("cli trace verify", "[cli]") {
  CHECK(run({"trace", "verify", trace("vstm-n3-tss.json")}).code == 0);
  CHECK(run({"trace", "verify", trace("identity-n3.json")}).code == 0);
  Run r = run({"trace", "verify", trace("corrupted-position-n3.json")});
  CHECK(r.code == 1);
  CHECK(r.json().at("failed_step") == 0);
  CHECK(run({"trace", "verify", vstlab::testing::fixture_path("malformed.json")}).code == 2);
  CHECK(run({"trace", "verify", "/nonexistent/trace.json"}).code == 2);
}

TEST_CASE("cli catalog", "[cli]") {
  Run r = run({"catalog", "--presentation", "vstm", "-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.json().at("count") == 11);
  CHECK(run({"catalog", "--presentation", "nothing", "-n", "3"}).code == 2);
}

TEST_CASE("cli usage errors", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
