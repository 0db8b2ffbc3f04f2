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

#include "vstlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "vstlab/error.hpp"

namespace vstlab {

char kind_prefix(GenKind kind) {
  switch (kind) {
    case GenKind::S: return 's';
    case GenKind::Tau: return 't';
    case GenKind::TauInv: return 'T';
    case GenKind::Nu: return 'v';
    case GenKind::Mu: return 'm';
    case GenKind::MuInv: return 'M';
    case GenKind::Gamma: return 'g';
  }
  return '?';
}

std::string to_token(Generator g) { return kind_prefix(g.kind) + std::to_string(g.index); }

std::optional<Generator> free_inverse(Generator g) {
  switch (g.kind) {
    case GenKind::S:
    case GenKind::Nu: return g;
    case GenKind::Tau: return Generator{GenKind::TauInv, g.index};
    case GenKind::TauInv: return Generator{GenKind::Tau, g.index};
    case GenKind::Mu: return Generator{GenKind::MuInv, g.index};
    case GenKind::MuInv: return Generator{GenKind::Mu, g.index};
    case GenKind::Gamma: return std::nullopt;
  }
  return std::nullopt;
}

std::string_view to_string(Alphabet a) {
  switch (a) {
    case Alphabet::Standard: return "standard";
    case Alphabet::Reduced: return "reduced";
    case Alphabet::Connecting: return "connecting";
    case Alphabet::ReducedConnecting: return "reduced-connecting";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::Monoid ? "monoid" : "group"; }

Alphabet parse_alphabet(std::string_view text) {
  for (auto a : {Alphabet::Standard, Alphabet::Reduced, Alphabet::Connecting,
                 Alphabet::ReducedConnecting}) {
    if (text == to_string(a)) return a;
  }
  throw ParseError("unknown alphabet '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view text) {
  if (text == "monoid") return Mode::Monoid;
  if (text == "group") return Mode::Group;
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

bool admits(Alphabet alphabet, Mode mode, Generator g) {
  const bool base_only = alphabet == Alphabet::Reduced || alphabet == Alphabet::ReducedConnecting;
  if (g.kind != GenKind::Nu && base_only && g.index != 1) return false;
  switch (alphabet) {
    case Alphabet::Standard:
    case Alphabet::Reduced:
      if (g.kind == GenKind::TauInv) return mode == Mode::Group;
      return g.kind == GenKind::S || g.kind == GenKind::Tau || g.kind == GenKind::Nu;
    case Alphabet::Connecting:
    case Alphabet::ReducedConnecting:
      return g.kind == GenKind::Mu || g.kind == GenKind::MuInv || g.kind == GenKind::Gamma ||
             g.kind == GenKind::Nu;
  }
  return false;
}

Word::Word(int n, Alphabet alphabet, Mode mode, std::vector<Generator> letters)
    : n_(n), alphabet_(alphabet), mode_(mode), letters_(std::move(letters)) {
  if (n < 2) throw ConstraintError("strand count must be at least 2, got " + std::to_string(n));
  for (const auto& g : letters_) {
    if (g.index < 1 || g.index > n - 1) {
      throw ConstraintError("generator " + to_token(g) + " out of range for n = " +
                            std::to_string(n));
    }
    if (!admits(alphabet_, mode_, g)) {
      throw ConstraintError("generator " + to_token(g) + " not in the " +
                            std::string(vstlab::to_string(alphabet_)) + " alphabet (" +
                            std::string(vstlab::to_string(mode_)) + " mode)");
    }
  }
}

Word Word::parse(std::string_view text, int n, Alphabet alphabet, Mode mode) {
  std::vector<Generator> letters;
  std::size_t pos = 0;
  bool saw_e = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && std::isspace(static_cast<unsigned char>(text[end])) == 0) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    GenKind kind;
    switch (tok[0]) {
      case 's': kind = GenKind::S; break;
      case 't': kind = GenKind::Tau; break;
      case 'T': kind = GenKind::TauInv; break;
      case 'v': kind = GenKind::Nu; break;
      case 'm': kind = GenKind::Mu; break;
      case 'M': kind = GenKind::MuInv; break;
      case 'g': kind = GenKind::Gamma; break;
      default: throw ParseError("unknown token '" + std::string(tok) + "'");
    }
    int index = 0;
    auto digits = tok.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("unknown token '" + std::string(tok) + "'");
    }
    letters.push_back({kind, index});
  }
  if (saw_e && !letters.empty()) throw ParseError("'e' must stand alone");
  return Word(n, alphabet, mode, std::move(letters));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const auto& g : letters_) {
    if (!out.empty()) out += ' ';
    out += to_token(g);
  }
  return out;
}

Word Word::with_letters(std::vector<Generator> letters) const {
  return Word(n_, alphabet_, mode_, std::move(letters));
}

Word operator*(const Word& a, const Word& b) {
  if (a.n_ != b.n_ || a.alphabet_ != b.alphabet_) {
    throw MismatchError("cannot concatenate words over different strands or alphabets");
  }
  std::vector<Generator> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  Mode mode = a.mode_ == Mode::Group || b.mode_ == Mode::Group ? Mode::Group : Mode::Monoid;
  return Word(a.n_, a.alphabet_, mode, std::move(letters));
}

Word free_reduce(const Word& w) {
  std::vector<Generator> stack;
  stack.reserve(w.size());
  for (const auto& g : w.letters()) {
    if (!stack.empty() && free_inverse(stack.back()) == g) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return w.with_letters(std::move(stack));
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  for (int k = 0; k < n; ++k) images_[static_cast<std::size_t>(k)] = k + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)]) {
      throw ConstraintError("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw MismatchError("composing permutations of different degree");
  Permutation out(a.size());
  for (int k = 1; k <= a.size(); ++k) out.images_[static_cast<std::size_t>(k - 1)] = b(a(k));
  return out;
}

Permutation pi_image(const Word& w) {
  std::vector<int> images(static_cast<std::size_t>(w.strands()));
  for (int k = 0; k < w.strands(); ++k) images[static_cast<std::size_t>(k)] = k + 1;
  for (const auto& g : w.letters()) {
    if (g.kind == GenKind::Mu || g.kind == GenKind::MuInv || g.kind == GenKind::Gamma) continue;
    // Post-compose with (i, i+1): swap the values i and i+1.
    for (int& x : images) {
      if (x == g.index) {
        x = g.index + 1;
      } else if (x == g.index + 1) {
        x = g.index;
      }
    }
  }
  return Permutation(std::move(images));
}

bool is_pure(const Word& w) { return pi_image(w).is_identity(); }

}  // namespace vstlab
