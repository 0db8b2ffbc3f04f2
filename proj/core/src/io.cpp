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

#include "vstlab/io.hpp"

#include "vstlab/error.hpp"

namespace vstlab {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

template <RingElement R>
Matrix<R> entries_from_json(const Json& rows, std::size_t n) {
  if (!rows.is_array() || rows.size() != n) throw ParseError("matrix entries must have n rows");
  Matrix<R> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("matrix rows must have n entries");
    for (std::size_t k = 0; k < n; ++k) {
      if (!rows[i][k].is_string()) throw ParseError("matrix entries must be strings");
      m(i, k) = RingTraits<R>::parse(rows[i][k].get<std::string>());
    }
  }
  return m;
}

std::string lookup(const RepSpec& s, const char* key, const char* fallback = nullptr) {
  auto it = s.params.find(key);
  if (it != s.params.end()) return it->second;
  if (fallback != nullptr) return fallback;
  throw ConstraintError("representation " + s.name + " needs parameter '" + key + "'");
}

template <RingElement R>
AnyRep images_rep(const Json& images, int n_hint) {
  typename Representation<R>::Images out;
  int n = n_hint;
  for (const auto& [token, mj] : images.items()) {
    AnyMatrix any = matrix_from_json(mj);
    auto* typed = std::get_if<Matrix<R>>(&any);
    if (typed == nullptr) throw ParseError("all image matrices must share one ring");
    Matrix<R> m = std::move(*typed);
    if (n == 0) n = static_cast<int>(m.size());
    Word w = Word::parse(token, n, Alphabet::Standard, Mode::Group);
    if (w.size() != 1) throw ParseError("image keys must be single generators, got '" + token + "'");
    out.emplace(w.letters()[0], std::move(m));
  }
  return Representation<R>("images", n, ExplicitImages{}, std::move(out));
}

}  // namespace

template <RingElement R>
Json matrix_to_json(const Matrix<R>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return {{"ring", std::string(RingTraits<R>::tag)}, {"n", m.size()}, {"entries", std::move(rows)}};
}

template Json matrix_to_json(const PolyMatrix&);
template Json matrix_to_json(const FieldMatrix&);

AnyMatrix matrix_from_json(const Json& j) {
  const std::string ring = require_string(j, "ring");
  const int n = require_int(j, "n");
  if (n < 1) throw ParseError("matrix size must be positive");
  const Json& rows = require(j, "entries");
  if (ring == "laurent") return entries_from_json<LaurentPoly>(rows, static_cast<std::size_t>(n));
  if (ring == "gaussian") return entries_from_json<Gaussian>(rows, static_cast<std::size_t>(n));
  throw ParseError("unknown ring '" + ring + "'");
}

Json word_to_json(const Word& w) {
  Json letters = Json::array();
  for (const auto& g : w.letters()) letters.push_back(to_token(g));
  return {{"n", w.strands()},
          {"mode", std::string(to_string(w.mode()))},
          {"alphabet", std::string(to_string(w.alphabet()))},
          {"letters", std::move(letters)}};
}

Word word_from_json(const Json& j) {
  const int n = require_int(j, "n");
  const Mode mode = j.contains("mode") ? parse_mode(require_string(j, "mode")) : Mode::Group;
  const Alphabet alphabet =
      j.contains("alphabet") ? parse_alphabet(require_string(j, "alphabet")) : Alphabet::Standard;
  const Json& letters = require(j, "letters");
  if (!letters.is_array()) throw ParseError("'letters' must be an array");
  std::string text;
  for (const auto& l : letters) {
    if (!l.is_string()) throw ParseError("letters must be strings");
    text += l.get<std::string>() + " ";
  }
  return Word::parse(text, n, alphabet, mode);
}

Json trace_to_json(const RewriteTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"label", s.label}, {"dir", std::string(to_string(s.dir))}, {"pos", s.pos}});
  }
  return {{"presentation", t.presentation},
          {"n", t.n},
          {"start", t.start.to_string()},
          {"end", t.end.to_string()},
          {"steps", std::move(steps)}};
}

RewriteTrace trace_from_json(const Json& j) {
  RewriteTrace t;
  t.presentation = require_string(j, "presentation");
  t.n = require_int(j, "n");
  const Presentation pres = presentation_catalog(t.presentation, t.n);
  t.start = pres.word(require_string(j, "start"));
  t.end = pres.word(require_string(j, "end"));
  const Json& steps = require(j, "steps");
  if (!steps.is_array()) throw ParseError("'steps' must be an array");
  for (const auto& s : steps) {
    const Json& pos = require(s, "pos");
    if (!pos.is_number_integer() || pos.get<long long>() < 0) {
      throw ParseError("step 'pos' must be a non-negative integer");
    }
    t.steps.push_back({require_string(s, "label"), parse_direction(require_string(s, "dir")),
                       pos.get<std::size_t>()});
  }
  return t;
}

Json report_to_json(const IrreducibilityReport& r) {
  Json witness = nullptr;
  if (r.witness) {
    witness = Json::array();
    for (const auto& x : *r.witness) witness.push_back(x.to_string());
  }
  Json predicate = nullptr;
  if (r.predicate) predicate = std::string(to_string(*r.predicate));
  return {{"n", r.n},
          {"t0", r.t0.to_string()},
          {"algebra_dimension", r.algebra_dimension},
          {"verdict", std::string(to_string(r.verdict))},
          {"witness", std::move(witness)},
          {"predicate", std::move(predicate)}};
}

Json relation_to_json(const Relation& r) {
  return {{"label", r.label}, {"instance", r.instance}, {"lhs", r.lhs.to_string()}, {"rhs", r.rhs.to_string()}};
}

Json catalog_to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations()) rels.push_back(relation_to_json(r));
  return {{"presentation", p.name()},
          {"n", p.strands()},
          {"alphabet", std::string(to_string(p.alphabet()))},
          {"mode", std::string(to_string(p.mode()))},
          {"count", p.relations().size()},
          {"relations", std::move(rels)}};
}

Json violations_to_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.instance);
  return out;
}

std::string canonical_rep_name(const std::string& name) {
  if (name == "eta1p") return "eta1_prime";
  if (name == "eta2p") return "eta2_prime";
  return name;
}

RepSpec rep_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("representation spec must be an object");
  RepSpec s;
  if (j.contains("images")) {
    s.images = j.at("images");
    if (!s.images.is_object() || s.images.empty()) throw ParseError("'images' must be a non-empty object");
    if (j.contains("n")) s.n = require_int(j, "n");
    return s;
  }
  s.name = canonical_rep_name(require_string(j, "name"));
  s.n = require_int(j, "n");
  if (j.contains("params")) {
    const Json& p = j.at("params");
    if (!p.is_object()) throw ParseError("'params' must be an object");
    for (const auto& [k, v] : p.items()) {
      if (v.is_string()) {
        s.params[k] = v.get<std::string>();
      } else if (v.is_number_integer()) {
        s.params[k] = std::to_string(v.get<long long>());
      } else {
        throw ParseError("parameter '" + k + "' must be a string");
      }
    }
  }
  if (j.contains("mode")) s.mode = require_string(j, "mode");
  return s;
}

Json rep_spec_to_json(const RepSpec& s) {
  if (!s.images.is_null()) {
    Json out = {{"images", s.images}};
    if (s.n != 0) out["n"] = s.n;
    return out;
  }
  Json out = {{"name", s.name}, {"n", s.n}, {"params", s.params}};
  if (s.name == "eta2_prime") out["mode"] = s.mode;
  return out;
}

AnyRep build_rep(const RepSpec& s) {
  if (!s.images.is_null()) {
    const Json& first = s.images.begin().value();
    const std::string ring = require_string(first, "ring");
    if (ring == "laurent") return images_rep<LaurentPoly>(s.images, s.n);
    if (ring == "gaussian") return images_rep<Gaussian>(s.images, s.n);
    throw ParseError("unknown ring '" + ring + "'");
  }
  const std::string name = canonical_rep_name(s.name);
  auto poly = [&](const char* key, const char* fallback = nullptr) {
    return LaurentPoly::parse(lookup(s, key, fallback));
  };
  auto field = [&](const char* key) { return Gaussian::parse(lookup(s, key, "0")); };
  if (name == "eta1") return rep_eta1(s.n);
  if (name == "eta2") return rep_eta2(s.n, poly("f"));
  if (name == "eta1_prime") return rep_eta1_prime(s.n, {poly("v")});
  if (name == "eta2_prime") {
    Eta2PrimeParams p{poly("f"), poly("w"), poly("y"), poly("v")};
    Mode mode;
    if (s.mode == "auto") {
      mode = det(eta2_tau_block(p)).is_unit() ? Mode::Group : Mode::Monoid;
    } else {
      mode = parse_mode(s.mode);
    }
    return rep_eta2_prime(s.n, p, mode);
  }
  if (name == "upsilon") {
    UpsilonParams p;
    const std::string family = lookup(s, "family");
    try {
      p.family = std::stoi(family);
    } catch (const std::exception&) {
      throw ParseError("family must be an integer, got '" + family + "'");
    }
    p.a = field("a");
    p.b = field("b");
    p.c = field("c");
    p.x = field("x");
    p.y = field("y");
    p.v = field("v");
    return rep_upsilon(p, s.n);
  }
  throw ConstraintError("unknown representation '" + s.name + "'");
}

int strands(const AnyRep& r) {
  return std::visit([](const auto& rep) { return rep.strands(); }, r);
}

}  // namespace vstlab
