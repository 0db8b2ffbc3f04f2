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

#include "vstlab/presentations.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "vstlab/error.hpp"

namespace vstlab {

namespace {

using Letters = std::vector<Generator>;

Generator gen(GenKind k, int i) { return {k, i}; }

std::string idx(int i) { return "[" + std::to_string(i) + "]"; }
std::string idx(int i, int j) { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

class CatalogBuilder {
 public:
  CatalogBuilder(int n, Alphabet alphabet, Mode mode) : n_(n), alphabet_(alphabet), mode_(mode) {}

  void add(const std::string& label, const std::string& suffix, Letters lhs, Letters rhs) {
    if (lhs == rhs) return;
    auto key = std::minmax(lhs, rhs);
    if (!seen_.insert({key.first, key.second}).second) return;
    relations_.push_back({label, label + suffix, Word(n_, alphabet_, mode_, std::move(lhs)),
                          Word(n_, alphabet_, mode_, std::move(rhs))});
  }

  /// Parses a fixed relation written in token form.
  void add(const std::string& label, std::string_view lhs, std::string_view rhs) {
    add(label, "", Word::parse(lhs, n_, alphabet_, mode_).letters(),
        Word::parse(rhs, n_, alphabet_, mode_).letters());
  }

  template <class F>
  void each(F&& f) const {
    for (int i = 1; i <= n_ - 1; ++i) f(i);
  }
  template <class F>
  void adjacent(F&& f) const {
    for (int i = 1; i <= n_ - 1; ++i) {
      for (int j = 1; j <= n_ - 1; ++j) {
        if (std::abs(i - j) == 1) f(i, j);
      }
    }
  }
  template <class F>
  void distant(F&& f) const {
    for (int i = 1; i <= n_ - 1; ++i) {
      for (int j = 1; j <= n_ - 1; ++j) {
        if (std::abs(i - j) >= 2) f(i, j);
      }
    }
  }

  /// g_i h_j = h_j g_i for |i-j| >= 2 over every unordered kind pair.
  void commuting(const std::string& prefix, std::initializer_list<GenKind> kinds) {
    std::vector<GenKind> ks(kinds);
    for (std::size_t a = 0; a < ks.size(); ++a) {
      for (std::size_t b = a; b < ks.size(); ++b) {
        std::string label = prefix + kind_prefix(ks[a]) + kind_prefix(ks[b]);
        distant([&](int i, int j) {
          add(label, idx(i, j), {gen(ks[a], i), gen(ks[b], j)}, {gen(ks[b], j), gen(ks[a], i)});
        });
      }
    }
  }

  void tau_inverses(const std::string& label) {
    each([&](int i) {
      add(label + "-r", idx(i), {gen(GenKind::Tau, i), gen(GenKind::TauInv, i)}, {});
      add(label + "-l", idx(i), {gen(GenKind::TauInv, i), gen(GenKind::Tau, i)}, {});
    });
  }

  Presentation build(std::string name) && {
    return Presentation(std::move(name), n_, alphabet_, mode_, std::move(relations_));
  }

  int n() const { return n_; }

 private:
  int n_;
  Alphabet alphabet_;
  Mode mode_;
  std::vector<Relation> relations_;
  std::set<std::pair<Letters, Letters>> seen_;
};

constexpr GenKind S = GenKind::S;
constexpr GenKind Tau = GenKind::Tau;
constexpr GenKind Nu = GenKind::Nu;
constexpr GenKind Mu = GenKind::Mu;
constexpr GenKind MuInv = GenKind::MuInv;
constexpr GenKind Gamma = GenKind::Gamma;

Presentation build_vstm(int n, bool group) {
  CatalogBuilder b(n, Alphabet::Standard, group ? Mode::Group : Mode::Monoid);
  b.each([&](int i) { b.add("eq20-s", idx(i), {gen(S, i), gen(S, i)}, {}); });
  b.each([&](int i) { b.add("eq20-nu", idx(i), {gen(Nu, i), gen(Nu, i)}, {}); });
  b.each([&](int i) { b.add("eq21", idx(i), {gen(Tau, i), gen(S, i)}, {gen(S, i), gen(Tau, i)}); });
  b.adjacent([&](int i, int j) {
    b.add("eq22", idx(i, j), {gen(S, i), gen(S, j), gen(Tau, i)},
          {gen(Tau, j), gen(S, i), gen(S, j)});
  });
  b.adjacent([&](int i, int j) {
    b.add("eq23", idx(i, j), {gen(Nu, i), gen(Nu, j), gen(Nu, i)}, {gen(Nu, j), gen(Nu, i), gen(Nu, j)});
  });
  b.adjacent([&](int i, int j) {
    b.add("eq24", idx(i, j), {gen(Nu, i), gen(S, j), gen(Nu, i)}, {gen(Nu, j), gen(S, i), gen(Nu, j)});
  });
  b.adjacent([&](int i, int j) {
    b.add("eq25", idx(i, j), {gen(Nu, i), gen(Tau, j), gen(Nu, i)},
          {gen(Nu, j), gen(Tau, i), gen(Nu, j)});
  });
  b.commuting("comm-", {S, Tau, Nu});
  if (group) b.tau_inverses("inv-t");
  return std::move(b).build(group ? "vst" : "vstm");
}

Presentation build_twin(int n) {
  CatalogBuilder b(n, Alphabet::Standard, Mode::Monoid);
  b.each([&](int i) { b.add("eq15", idx(i), {gen(S, i), gen(S, i)}, {}); });
  b.distant([&](int i, int j) {
    b.add("eq16", idx(i, j), {gen(S, i), gen(S, j)}, {gen(S, j), gen(S, i)});
  });
  return std::move(b).build("twin");
}

Presentation build_stm(int n, bool group) {
  CatalogBuilder b(n, Alphabet::Standard, group ? Mode::Group : Mode::Monoid);
  b.each([&](int i) { b.add("eq15", idx(i), {gen(S, i), gen(S, i)}, {}); });
  b.distant([&](int i, int j) {
    b.add("eq16", idx(i, j), {gen(S, i), gen(S, j)}, {gen(S, j), gen(S, i)});
  });
  b.distant([&](int i, int j) {
    b.add("eq4", idx(i, j), {gen(Tau, i), gen(Tau, j)}, {gen(Tau, j), gen(Tau, i)});
  });
  b.distant([&](int i, int j) {
    b.add("eq17", idx(i, j), {gen(Tau, i), gen(S, j)}, {gen(S, j), gen(Tau, i)});
  });
  b.each([&](int i) { b.add("eq18", idx(i), {gen(Tau, i), gen(S, i)}, {gen(S, i), gen(Tau, i)}); });
  b.adjacent([&](int i, int j) {
    b.add("eq19", idx(i, j), {gen(S, i), gen(S, j), gen(Tau, i)},
          {gen(Tau, j), gen(S, i), gen(S, j)});
  });
  if (group) b.tau_inverses("inv-t");
  return std::move(b).build(group ? "st" : "stm");
}

Presentation build_reduced_vstm(int n) {
  CatalogBuilder b(n, Alphabet::Reduced, Mode::Monoid);
  b.adjacent([&](int i, int j) {
    b.add("eq36", idx(i, j), {gen(Nu, i), gen(Nu, j), gen(Nu, i)}, {gen(Nu, j), gen(Nu, i), gen(Nu, j)});
  });
  b.distant([&](int i, int j) {
    b.add("eq37", idx(i, j), {gen(Nu, i), gen(Nu, j)}, {gen(Nu, j), gen(Nu, i)});
  });
  b.each([&](int i) { b.add("eq38-nu", idx(i), {gen(Nu, i), gen(Nu, i)}, {}); });
  b.add("eq38-s", "", {gen(S, 1), gen(S, 1)}, {});
  b.add("eq39", "", {gen(S, 1), gen(Tau, 1)}, {gen(Tau, 1), gen(S, 1)});
  for (int i = 3; i <= n - 1; ++i) {
    b.add("eq40-t", idx(i), {gen(Tau, 1), gen(Nu, i)}, {gen(Nu, i), gen(Tau, 1)});
    b.add("eq40-s", idx(i), {gen(S, 1), gen(Nu, i)}, {gen(Nu, i), gen(S, 1)});
  }
  if (n >= 3) b.add("eq41", "t1 v1 v2 s1 v2 v1 s1", "v1 v2 s1 v2 v1 s1 v1 v2 t1 v2 v1");
  if (n >= 4) {
    b.add("eq42", "s1 v2 v3 v1 v2 s1 v2 v1 v3 v2", "v2 v3 v1 v2 s1 v2 v1 v3 v2 s1");
    b.add("eq43", "t1 v2 v3 v1 v2 s1 v2 v1 v3 v2", "v2 v3 v1 v2 s1 v2 v1 v3 v2 t1");
    b.add("eq44", "t1 v2 v3 v1 v2 t1 v2 v1 v3 v2", "v2 v3 v1 v2 t1 v2 v1 v3 v2 t1");
  }
  return std::move(b).build("reduced-vstm");
}

Presentation build_mn(int n) {
  CatalogBuilder b(n, Alphabet::Connecting, Mode::Monoid);
  b.each([&](int i) { b.add("mnid-nu", idx(i), {gen(Nu, i), gen(Nu, i)}, {}); });
  b.each([&](int i) { b.add("mnid-mu-r", idx(i), {gen(Mu, i), gen(MuInv, i)}, {}); });
  b.each([&](int i) { b.add("mnid-mu-l", idx(i), {gen(MuInv, i), gen(Mu, i)}, {}); });
  b.adjacent([&](int i, int j) {
    b.add("mnv3", idx(i, j), {gen(Nu, i), gen(Nu, j), gen(Nu, i)}, {gen(Nu, j), gen(Nu, i), gen(Nu, j)});
  });
  b.adjacent([&](int i, int j) {
    b.add("mnvr3", idx(i, j), {gen(Nu, i), gen(Mu, j), gen(Nu, i)}, {gen(Nu, j), gen(Mu, i), gen(Nu, j)});
  });
  b.adjacent([&](int i, int j) {
    b.add("mnvs3", idx(i, j), {gen(Nu, i), gen(Gamma, j), gen(Nu, i)},
          {gen(Nu, j), gen(Gamma, i), gen(Nu, j)});
  });
  b.adjacent([&](int i, int j) {
    b.add("mnrs31", idx(i, j), {gen(Mu, j), gen(Nu, j), gen(Mu, i), gen(Nu, j), gen(Gamma, i)},
          {gen(Gamma, i), gen(Nu, j), gen(Mu, i), gen(Nu, j), gen(Mu, j)});
  });
  b.each([&](int i) {
    b.add("mnr1", idx(i), {gen(Mu, i), gen(Nu, i), gen(Gamma, i)}, {gen(Gamma, i), gen(Nu, i), gen(Mu, i)});
  });
  b.commuting("mnfc-", {Mu, Gamma, Nu});
  return std::move(b).build("mn");
}

Presentation build_reduced_mn(int n) {
  CatalogBuilder b(n, Alphabet::ReducedConnecting, Mode::Monoid);
  b.each([&](int i) { b.add("rmn-id-nu", idx(i), {gen(Nu, i), gen(Nu, i)}, {}); });
  b.add("rmn-id-mu-r", "", {gen(Mu, 1), gen(MuInv, 1)}, {});
  b.add("rmn-id-mu-l", "", {gen(MuInv, 1), gen(Mu, 1)}, {});
  b.adjacent([&](int i, int j) {
    b.add("rmn-v3", idx(i, j), {gen(Nu, i), gen(Nu, j), gen(Nu, i)}, {gen(Nu, j), gen(Nu, i), gen(Nu, j)});
  });
  if (n >= 3) b.add("rmn-rs31", "v1 v2 m1 v2 v1 v2 m1 v2 g1", "g1 v2 m1 v2 v1 v2 m1 v2 v1");
  b.add("rmn-r1", "m1 v1 g1", "g1 v1 m1");
  b.distant([&](int i, int j) {
    b.add("rmn-fc-v", idx(i, j), {gen(Nu, i), gen(Nu, j)}, {gen(Nu, j), gen(Nu, i)});
  });
  for (int i = 3; i <= n - 1; ++i) {
    b.add("rmn-fc-m", idx(i), {gen(Mu, 1), gen(Nu, i)}, {gen(Nu, i), gen(Mu, 1)});
    b.add("rmn-fc-g", idx(i), {gen(Gamma, 1), gen(Nu, i)}, {gen(Nu, i), gen(Gamma, 1)});
  }
  if (n >= 4) {
    b.add("rmn-fc-gg", "g1 v2 v1 v3 v2 g1 v2 v3 v1 v2", "v2 v1 v3 v2 g1 v2 v3 v1 v2 g1");
    b.add("rmn-fc-gm", "g1 v2 v1 v3 v2 m1 v2 v3 v1 v2", "v2 v1 v3 v2 m1 v2 v3 v1 v2 g1");
    b.add("rmn-fc-mm", "m1 v2 v1 v3 v2 m1 v2 v3 v1 v2", "v2 v1 v3 v2 m1 v2 v3 v1 v2 m1");
  }
  return std::move(b).build("reduced-mn");
}

bool source_matches(const Word& w, const Word& src, std::size_t pos) {
  const auto& l = w.letters();
  const auto& s = src.letters();
  if (pos > l.size() || s.size() > l.size() - pos) return false;
  return std::equal(s.begin(), s.end(), l.begin() + static_cast<std::ptrdiff_t>(pos));
}

}  // namespace

Presentation::Presentation(std::string name, int n, Alphabet alphabet, Mode mode,
                           std::vector<Relation> relations)
    : name_(std::move(name)), n_(n), alphabet_(alphabet), mode_(mode), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    for (const Word* w : {&r.lhs, &r.rhs}) {
      if (w->strands() != n_ || w->alphabet() != alphabet_) {
        throw MismatchError("relation " + r.instance + " does not fit presentation " + name_);
      }
    }
    if (pi_image(r.lhs) != pi_image(r.rhs)) {
      throw ConstraintError("relation " + r.instance + " is not pi-compatible");
    }
  }
}

std::vector<const Relation*> Presentation::family(std::string_view label) const {
  std::vector<const Relation*> out;
  for (const auto& r : relations_) {
    if (r.label == label) out.push_back(&r);
  }
  return out;
}

const Relation* Presentation::instance(std::string_view instance) const {
  for (const auto& r : relations_) {
    if (r.instance == instance) return &r;
  }
  return nullptr;
}

bool Presentation::has_label(std::string_view label) const {
  return std::any_of(relations_.begin(), relations_.end(),
                     [&](const Relation& r) { return r.label == label || r.instance == label; });
}

Word Presentation::word(std::string_view text) const { return Word::parse(text, n_, alphabet_, mode_); }

const std::vector<std::string>& presentation_names() {
  static const std::vector<std::string> names = {"vstm", "vst",          "twin", "stm",
                                                 "st",   "reduced-vstm", "mn",   "reduced-mn"};
  return names;
}

Presentation presentation_catalog(std::string_view name, int n) {
  if (n < 2) throw ConstraintError("presentations need n >= 2, got " + std::to_string(n));
  if (name == "vstm") return build_vstm(n, false);
  if (name == "vst") return build_vstm(n, true);
  if (name == "twin") return build_twin(n);
  if (name == "stm") return build_stm(n, false);
  if (name == "st") return build_stm(n, true);
  if (name == "reduced-vstm") return build_reduced_vstm(n);
  if (name == "mn") return build_mn(n);
  if (name == "reduced-mn") return build_reduced_mn(n);
  throw ConstraintError("unknown presentation '" + std::string(name) + "'");
}

Word derive_generator(GenKind kind, int index, int n) {
  const bool connecting = kind == GenKind::Mu || kind == GenKind::MuInv || kind == GenKind::Gamma;
  const Alphabet alphabet = connecting ? Alphabet::Connecting : Alphabet::Standard;
  const Mode mode = kind == GenKind::TauInv ? Mode::Group : Mode::Monoid;
  if (kind == GenKind::Nu) throw ConstraintError("virtual generators are not derived");
  if (index < 1 || index > n - 1) {
    throw ConstraintError("index " + std::to_string(index) + " out of range for n = " + std::to_string(n));
  }
  Letters out;
  const int i = index - 1;
  for (int k = i; k >= 1; --k) out.push_back(gen(Nu, k));
  for (int k = i + 1; k >= 2; --k) out.push_back(gen(Nu, k));
  out.push_back(gen(kind, 1));
  for (int k = 2; k <= i + 1; ++k) out.push_back(gen(Nu, k));
  for (int k = 1; k <= i; ++k) out.push_back(gen(Nu, k));
  return Word(n, alphabet, mode, std::move(out));
}

Word expand_reduced(const Word& w) {
  switch (w.alphabet()) {
    case Alphabet::Reduced: return Word(w.strands(), Alphabet::Standard, w.mode(), w.letters());
    case Alphabet::ReducedConnecting:
      return Word(w.strands(), Alphabet::Connecting, w.mode(), w.letters());
    default:
      throw MismatchError("expand_reduced expects a reduced word, got the " +
                          std::string(to_string(w.alphabet())) + " alphabet");
  }
}

Word to_reduced(const Word& w) {
  Alphabet target = Alphabet::Reduced;
  switch (w.alphabet()) {
    case Alphabet::Reduced:
    case Alphabet::ReducedConnecting: return w;
    case Alphabet::Standard: target = Alphabet::Reduced; break;
    case Alphabet::Connecting: target = Alphabet::ReducedConnecting; break;
  }
  Letters out;
  for (const auto& g : w.letters()) {
    if (g.kind == GenKind::Nu || g.index == 1) {
      out.push_back(g);
    } else {
      const Word d = derive_generator(g.kind, g.index, w.strands());
      out.insert(out.end(), d.letters().begin(), d.letters().end());
    }
  }
  return Word(w.strands(), target, w.mode(), std::move(out));
}

Word map_F(const Word& w) {
  if (w.alphabet() == Alphabet::ReducedConnecting) return map_F(expand_reduced(w));
  if (w.alphabet() != Alphabet::Connecting) {
    throw MismatchError("F expects a connecting-alphabet word");
  }
  Letters out;
  for (const auto& g : w.letters()) {
    switch (g.kind) {
      case GenKind::Nu: out.push_back(g); break;
      case GenKind::Mu: out.insert(out.end(), {gen(S, g.index), gen(Nu, g.index)}); break;
      case GenKind::MuInv: out.insert(out.end(), {gen(Nu, g.index), gen(S, g.index)}); break;
      case GenKind::Gamma: out.insert(out.end(), {gen(Tau, g.index), gen(Nu, g.index)}); break;
      default: throw MismatchError("F: unexpected letter " + to_token(g));
    }
  }
  return Word(w.strands(), Alphabet::Standard, Mode::Monoid, std::move(out));
}

Word map_G(const Word& w) {
  if (w.alphabet() == Alphabet::Reduced) return map_G(expand_reduced(w));
  if (w.alphabet() != Alphabet::Standard) {
    throw MismatchError("G expects a standard-alphabet word");
  }
  Letters out;
  for (const auto& g : w.letters()) {
    switch (g.kind) {
      case GenKind::Nu: out.push_back(g); break;
      case GenKind::S: out.insert(out.end(), {gen(Mu, g.index), gen(Nu, g.index)}); break;
      case GenKind::Tau: out.insert(out.end(), {gen(Gamma, g.index), gen(Nu, g.index)}); break;
      case GenKind::TauInv:
        throw ConstraintError("G is defined on monoid words only; " + to_token(g) +
                              " has no image in M_n");
      default: throw MismatchError("G: unexpected letter " + to_token(g));
    }
  }
  return Word(w.strands(), Alphabet::Connecting, Mode::Monoid, std::move(out));
}

std::string_view to_string(Direction d) { return d == Direction::LeftToRight ? "lr" : "rl"; }

Direction parse_direction(std::string_view text) {
  if (text == "lr") return Direction::LeftToRight;
  if (text == "rl") return Direction::RightToLeft;
  throw ParseError("direction must be 'lr' or 'rl', got '" + std::string(text) + "'");
}

Word rewrite_step(const Word& w, const Relation& rel, Direction dir, std::size_t pos) {
  const Word& src = dir == Direction::LeftToRight ? rel.lhs : rel.rhs;
  const Word& dst = dir == Direction::LeftToRight ? rel.rhs : rel.lhs;
  if (w.strands() != src.strands()) throw MismatchError("relation and word differ in strand count");
  if (!source_matches(w, src, pos)) {
    throw MismatchError(rel.instance + " (" + std::string(to_string(dir)) + "): '" +
                        src.to_string() + "' does not occur at position " + std::to_string(pos) +
                        " of '" + w.to_string() + "'");
  }
  Letters out(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), dst.letters().begin(), dst.letters().end());
  out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos + src.size()),
             w.letters().end());
  return w.with_letters(std::move(out));
}

TraceCheck verify_trace(const RewriteTrace& trace, const Presentation& pres) {
  if (!trace.presentation.empty() && trace.presentation != pres.name()) {
    throw MismatchError("trace cites presentation '" + trace.presentation + "' but '" +
                        pres.name() + "' was supplied");
  }
  if (trace.n != pres.strands() || trace.start.strands() != pres.strands() ||
      trace.end.strands() != pres.strands()) {
    throw MismatchError("trace strand count does not match the presentation");
  }
  for (const auto& step : trace.steps) {
    if (!pres.has_label(step.label)) {
      throw ConstraintError("unknown relation label '" + step.label + "' in " + pres.name());
    }
  }
  TraceCheck check;
  Word current = trace.start;
  check.words.push_back(current);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& step = trace.steps[k];
    std::vector<const Relation*> candidates;
    if (const Relation* r = pres.instance(step.label)) {
      candidates.push_back(r);
    } else {
      candidates = pres.family(step.label);
    }
    const Relation* chosen = nullptr;
    for (const Relation* r : candidates) {
      const Word& src = step.dir == Direction::LeftToRight ? r->lhs : r->rhs;
      if (source_matches(current, src, step.pos)) {
        chosen = r;
        break;
      }
    }
    if (chosen == nullptr) {
      check.failed_step = k;
      check.message = "step " + std::to_string(k) + ": no " + step.label + " (" +
                      std::string(to_string(step.dir)) + ") side occurs at position " +
                      std::to_string(step.pos) + " of '" + current.to_string() + "'";
      return check;
    }
    current = rewrite_step(current, *chosen, step.dir, step.pos);
    check.words.push_back(current);
  }
  if (current.letters() != trace.end.letters()) {
    check.failed_step = trace.steps.size();
    check.message = "replay ends at '" + current.to_string() + "', expected '" +
                    trace.end.to_string() + "'";
    return check;
  }
  check.ok = true;
  return check;
}

}  // namespace vstlab
